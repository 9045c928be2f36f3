"""Physical constants and the momentum-cutoff type.

All masses and momentum scales are carried in GeV; SI units appear only in
the permittivity comparison. Newton's constant is stored through the Planck
mass it implies, so every logarithm in the model stays a pure mass ratio:
ln(hbar*c/(G*m^2)) == 2*ln(m_Planck/m) by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ConstantsFileError

__all__ = [
    "PhysicalConstants",
    "CODATA_2018",
    "Cutoff",
    "planck_mass",
    "resolve_cutoff",
    "load_constants",
    "parse_cutoff",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Snapshot of measured constants (CODATA 2018 / SI 2019 defaults).

    ``planck_mass_gev`` is the non-reduced Planck mass sqrt(hbar*c/G)
    expressed as an energy; it encodes G = hbar*c / m_Planck^2.
    ``elementary_charge_si`` is exact in the 2019 SI and doubles as the
    GeV-to-joule conversion.
    """

    hbar_c_gev_fm: float = 0.1973269804
    planck_mass_gev: float = 1.220890e19
    alpha_inverse_measured: float = 137.035999084
    epsilon0_si: float = 8.8541878128e-12
    elementary_charge_si: float = 1.602176634e-19

    def __post_init__(self):
        for field in (
            "hbar_c_gev_fm",
            "planck_mass_gev",
            "alpha_inverse_measured",
            "epsilon0_si",
            "elementary_charge_si",
        ):
            value = getattr(self, field)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"{field} must be a finite positive number, got {value!r}")

    @property
    def hbar_c_joule_metre(self) -> float:
        """hbar*c in J·m, derived from the GeV·fm value and the exact charge."""
        # GeV·fm -> J·m: 1e-15 m/fm times 1e9 * e J/GeV.
        return self.hbar_c_gev_fm * self.elementary_charge_si * 1e-6


CODATA_2018 = PhysicalConstants()


def planck_mass(constants: PhysicalConstants = CODATA_2018) -> float:
    """Non-reduced Planck mass sqrt(hbar*c/G) in GeV."""
    return constants.planck_mass_gev


@dataclass(frozen=True)
class Cutoff:
    """Momentum cutoff expressed as a mass scale in GeV.

    Three ways to build one:

    * ``Cutoff.planck()``: resolves to the constants' Planck mass.
    * ``Cutoff.explicit(mass_gev)``: a concrete scale; resolving returns
      the stored value exactly.
    * ``Cutoff.from_log(log_mass_gev)``: ln(mass/GeV), for scales past
      the float64 range (solved Landau poles of weakly charged sets).
    """

    mass_gev: float | None = None
    log_mass_gev: float | None = None

    @classmethod
    def planck(cls) -> "Cutoff":
        return cls()

    @classmethod
    def explicit(cls, mass_gev: float) -> "Cutoff":
        if not (isinstance(mass_gev, (int, float)) and math.isfinite(mass_gev) and mass_gev > 0):
            raise ValueError(f"explicit cutoff mass must be finite and > 0, got {mass_gev!r}")
        mass_gev = float(mass_gev)
        return cls(mass_gev=mass_gev, log_mass_gev=math.log(mass_gev))

    @classmethod
    def from_log(cls, log_mass_gev: float) -> "Cutoff":
        if not (isinstance(log_mass_gev, (int, float)) and math.isfinite(log_mass_gev)):
            raise ValueError(f"log cutoff mass must be finite, got {log_mass_gev!r}")
        log_mass_gev = float(log_mass_gev)
        # exp may overflow to inf for extreme scales; the log stays authoritative.
        try:
            mass = math.exp(log_mass_gev)
        except OverflowError:
            mass = math.inf
        return cls(mass_gev=mass, log_mass_gev=log_mass_gev)

    @property
    def is_planck(self) -> bool:
        return self.log_mass_gev is None

    def resolved_log(self, constants: PhysicalConstants = CODATA_2018) -> float:
        """ln(cutoff mass / GeV); the form every log term consumes."""
        if self.is_planck:
            return math.log(constants.planck_mass_gev)
        return self.log_mass_gev

    def __repr__(self):
        if self.is_planck:
            return "Cutoff.planck()"
        if self.mass_gev is not None and math.isfinite(self.mass_gev):
            return f"Cutoff.explicit({self.mass_gev!r})"
        return f"Cutoff.from_log({self.log_mass_gev!r})"


def resolve_cutoff(cutoff: Cutoff, constants: PhysicalConstants = CODATA_2018) -> float:
    """Cutoff as a GeV mass: the Planck mass, or the stored explicit value."""
    if cutoff.is_planck:
        return constants.planck_mass_gev
    return cutoff.mass_gev


def parse_cutoff(text: str) -> Cutoff:
    """Parse a CLI/config cutoff spec: ``planck`` or a mass in GeV."""
    text = text.strip()
    if text.lower() == "planck":
        return Cutoff.planck()
    try:
        mass = float(text)
    except ValueError:
        raise ValueError(f"cutoff must be 'planck' or a mass in GeV, got {text!r}") from None
    return Cutoff.explicit(mass)


_CONSTANT_KEYS = {
    "hbar_c_gev_fm": "hbar_c_gev_fm",
    "planck_mass_gev": "planck_mass_gev",
    "alpha_inverse_measured": "alpha_inverse_measured",
    "epsilon0_si": "epsilon0_si",
    "elementary_charge_si": "elementary_charge_si",
}


def load_constants(source: str | Path) -> PhysicalConstants:
    """Read a ``key = value`` override file on top of the built-in snapshot.

    Recognized keys: hbar_c_gev_fm, planck_mass_gev, alpha_inverse_measured,
    epsilon0_si, elementary_charge_si. Blank lines and ``#`` comments are
    skipped; unknown keys are an error.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source
    overrides: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConstantsFileError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONSTANT_KEYS:
            raise ConstantsFileError(f"line {lineno}: unknown constant {key!r}")
        try:
            overrides[_CONSTANT_KEYS[key]] = float(value.strip())
        except ValueError:
            raise ConstantsFileError(
                f"line {lineno}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    try:
        return PhysicalConstants(**overrides)
    except ValueError as exc:
        raise ConstantsFileError(str(exc)) from None
