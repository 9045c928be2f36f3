"""Charged-particle data model, the built-in Standard-Model set, and table I/O.

Charges are exact rationals in units of the elementary charge, so the total
charge-squared weight of the Standard-Model set is the integer 9, not
8.999...; several identity tests depend on that exactness.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, Iterator

from .errors import ParticleTableError

__all__ = [
    "Particle",
    "ParticleSet",
    "builtin_standard_model",
    "load_particles",
    "charge_weight_sum",
    "serialize_particles",
]

KINDS = ("lepton", "quark", "boson", "custom")


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "charge_over_e must be exact: pass a Fraction, int, or 'n/d' string, not a float"
        )
    return Fraction(value)


@dataclass(frozen=True)
class Particle:
    """One charged elementary particle type.

    ``multiplicity`` counts internal color states (3 per quark flavor),
    ``charge_over_e`` is the charge in units of e as an exact rational.
    A zero charge is allowed; such a row simply contributes no weight.
    """

    name: str
    charge_over_e: Fraction
    mass_gev: float
    multiplicity: int = 1
    kind: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "charge_over_e", _as_fraction(self.charge_over_e))
        if not self.name or any(c in self.name for c in ",\n\r"):
            raise ValueError(f"invalid particle name {self.name!r}")
        if not (isinstance(self.mass_gev, (int, float)) and self.mass_gev > 0):
            raise ValueError(f"{self.name}: mass must be > 0, got {self.mass_gev!r}")
        object.__setattr__(self, "mass_gev", float(self.mass_gev))
        if not (isinstance(self.multiplicity, int) and self.multiplicity >= 1):
            raise ValueError(f"{self.name}: multiplicity must be a positive integer")
        if self.kind not in KINDS:
            raise ValueError(f"{self.name}: kind must be one of {KINDS}, got {self.kind!r}")

    @property
    def weight(self) -> Fraction:
        """multiplicity * (q/e)^2, the particle's strength in every sum."""
        return self.charge_over_e ** 2 * self.multiplicity


@dataclass(frozen=True)
class ParticleSet:
    """Ordered, name-unique collection of particles."""

    particles: tuple[Particle, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "particles", tuple(self.particles))
        seen = set()
        for p in self.particles:
            if p.name in seen:
                raise ParticleTableError(f"duplicate particle name {p.name!r}")
            seen.add(p.name)

    def __iter__(self) -> Iterator[Particle]:
        return iter(self.particles)

    def __len__(self) -> int:
        return len(self.particles)

    def __getitem__(self, index: int) -> Particle:
        return self.particles[index]

    @property
    def weight_sum(self) -> Fraction:
        """Total charge-squared weight W, summed exactly."""
        return sum((p.weight for p in self.particles), Fraction(0))

    @property
    def expanded_count(self) -> int:
        """Number of contributing entries counting color states separately."""
        return sum(p.multiplicity for p in self.particles)

    def sha256(self) -> str:
        return hashlib.sha256(serialize_particles(self).encode("utf-8")).hexdigest()


# Pinned snapshot: PDG 2022 Review of Particle Physics. Quark masses are
# current (MSbar) masses, not constituent masses; W mass is the PDG average.
_STANDARD_MODEL_ROWS = (
    ("electron", "-1",  0.00051099895, 1, "lepton"),
    ("muon",     "-1",  0.1056583755,  1, "lepton"),
    ("tau",      "-1",  1.77686,       1, "lepton"),
    ("up",       "2/3", 0.00216,       3, "quark"),
    ("down",     "-1/3", 0.00467,      3, "quark"),
    ("strange",  "-1/3", 0.0934,       3, "quark"),
    ("charm",    "2/3", 1.27,          3, "quark"),
    ("bottom",   "-1/3", 4.18,         3, "quark"),
    ("top",      "2/3", 172.69,        3, "quark"),
    ("w_boson",  "1",   80.377,        1, "boson"),
)


def builtin_standard_model() -> ParticleSet:
    """The 22 charged Standard-Model states as 10 rows.

    Three charged leptons, six quark flavors with color multiplicity 3,
    and the W boson.
    """
    return ParticleSet(
        tuple(
            Particle(name, Fraction(charge), mass, mult, kind)
            for name, charge, mass, mult, kind in _STANDARD_MODEL_ROWS
        )
    )


def charge_weight_sum(particles: ParticleSet) -> Fraction:
    """Exact W = sum of multiplicity * (q/e)^2 over the set."""
    return particles.weight_sum


def _parse_row(line: str, lineno: int) -> Particle:
    fields = [f.strip() for f in line.split(",")]
    if len(fields) != 5:
        raise ParticleTableError(
            f"expected 5 comma-separated fields (name, charge, mass, multiplicity, kind),"
            f" got {len(fields)}", lineno,
        )
    name, charge_text, mass_text, mult_text, kind = fields
    try:
        charge = Fraction(charge_text)
    except (ValueError, ZeroDivisionError):
        raise ParticleTableError(f"unparseable rational charge {charge_text!r}", lineno) from None
    try:
        mass = float(mass_text)
    except ValueError:
        raise ParticleTableError(f"unparseable mass {mass_text!r}", lineno) from None
    if not mass > 0:
        raise ParticleTableError(f"non-positive mass {mass_text!r} for {name!r}", lineno)
    try:
        mult = int(mult_text)
    except ValueError:
        raise ParticleTableError(f"unparseable multiplicity {mult_text!r}", lineno) from None
    if mult < 1:
        raise ParticleTableError(f"multiplicity must be >= 1, got {mult}", lineno)
    try:
        return Particle(name, charge, mass, mult, kind)
    except ValueError as exc:
        raise ParticleTableError(str(exc), lineno) from None


def load_particles(source: str | IO[str] | Iterable[str]) -> ParticleSet:
    """Parse a particle table from text.

    Line-oriented, ``#`` starts a comment, columns are comma-separated:
    ``name, charge_over_e, mass_GeV, multiplicity, kind``, e.g.::

        up, 2/3, 0.00216, 3, quark

    Raises ParticleTableError with the offending line number on bad rows
    and on duplicate names. An empty table is valid (W = 0); operations
    that need charged content reject it downstream.
    """
    if hasattr(source, "read"):
        text = source.read()
        lines = text.splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [line.rstrip("\n") for line in source]

    rows: list[Particle] = []
    names: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        particle = _parse_row(line, lineno)
        if particle.name in names:
            raise ParticleTableError(
                f"duplicate particle name {particle.name!r}"
                f" (first defined on line {names[particle.name]})", lineno,
            )
        names[particle.name] = lineno
        rows.append(particle)
    return ParticleSet(tuple(rows))


def _format_charge(charge: Fraction) -> str:
    if charge.denominator == 1:
        return str(charge.numerator)
    return f"{charge.numerator}/{charge.denominator}"


def serialize_particles(particles: ParticleSet) -> str:
    """Render a set back to table text; load_particles round-trips it."""
    lines = ["# name, charge_over_e, mass_gev, multiplicity, kind"]
    for p in particles:
        lines.append(
            f"{p.name}, {_format_charge(p.charge_over_e)}, {p.mass_gev!r},"
            f" {p.multiplicity}, {p.kind}"
        )
    return "\n".join(lines) + "\n"
