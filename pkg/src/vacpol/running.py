"""One-loop running of the inverse fine-structure constant.

alpha^-1(k^2) = alpha^-1(0) - (1/3pi) * sum_j w_j * ln(|k^2|/m_j^2) with
w_j = multiplicity * (q_j/e)^2, its closed form at a cutoff, the Landau
pole where it extrapolates to zero, and the historical uniform-charge
(Zel'dovich/Landau) special case with its inverse.

All log-term sums go through math.fsum, so cross-module identities hold to
a few ulps rather than drifting with accumulation order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .constants import CODATA_2018, Cutoff, PhysicalConstants
from .dielectric import weighted_log_terms
from .errors import DomainError
from .particles import ParticleSet

__all__ = [
    "THRESHOLD_MODES",
    "OffShellness",
    "RunningPoint",
    "LandauPoleResult",
    "alpha_inverse_running",
    "alpha_inverse_zero",
    "landau_pole",
    "zeldovich_alpha_inverse",
    "zeldovich_species_count",
]

THRESHOLD_MODES = ("decouple_below_threshold", "asymptotic_all")


@dataclass(frozen=True)
class OffShellness:
    """Magnitude of the photon off-shellness |k^2| in GeV^2.

    Only the magnitude enters the running; ``timelike`` records the sign
    of k^2 as metadata.
    """

    k2_abs_gev2: float
    timelike: bool = False

    def __post_init__(self):
        if not (
            isinstance(self.k2_abs_gev2, (int, float))
            and math.isfinite(self.k2_abs_gev2)
            and self.k2_abs_gev2 > 0
        ):
            raise DomainError(f"|k^2| must be finite and > 0, got {self.k2_abs_gev2!r}")
        object.__setattr__(self, "k2_abs_gev2", float(self.k2_abs_gev2))


@dataclass(frozen=True)
class RunningPoint:
    k2_abs_gev2: float
    alpha_inverse: float
    included_weight: Fraction


@dataclass(frozen=True)
class LandauPoleResult:
    """Scale where the one-loop inverse coupling crosses zero.

    ``log_cutoff_mass_gev`` is the authoritative value; ``cutoff_mass_gev``
    is exp() of it and overflows to inf for weakly charged sets.
    """

    cutoff_mass_gev: float
    log_cutoff_mass_gev: float
    residual: float
    iterations: int


def alpha_inverse_running(
    point: OffShellness,
    particles: ParticleSet,
    alpha0_inverse: float,
    mode: str = "decouple_below_threshold",
) -> RunningPoint:
    """Evaluate the running inverse coupling at one off-shellness.

    ``decouple_below_threshold`` keeps a particle out of the sum until
    |k^2| exceeds its mass squared, so every contribution is positive and
    the curve is continuous through each threshold. ``asymptotic_all``
    sums every particle regardless, which is the literal asymptotic
    formula. Values beyond the Landau pole come back negative, not
    clamped.
    """
    if mode not in THRESHOLD_MODES:
        raise ValueError(f"mode must be one of {THRESHOLD_MODES}, got {mode!r}")
    if len(particles) == 0:
        raise DomainError("running coupling of an empty particle set is undefined")
    if not alpha0_inverse > 0:
        raise DomainError(f"alpha0_inverse must be > 0, got {alpha0_inverse!r}")

    k2 = point.k2_abs_gev2
    terms: list[float] = []
    included = Fraction(0)
    for p in particles:
        m2 = p.mass_gev * p.mass_gev
        if mode == "decouple_below_threshold" and not m2 < k2:
            continue
        terms.append(float(p.weight) * math.log(k2 / m2))
        included += p.weight

    alpha_inv = alpha0_inverse - math.fsum(terms) / (3.0 * math.pi)
    return RunningPoint(k2_abs_gev2=k2, alpha_inverse=alpha_inv, included_weight=included)


def alpha_inverse_zero(
    particles: ParticleSet,
    cutoff: Cutoff = Cutoff.planck(),
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Closed-form alpha^-1(0) = (1/3pi) * sum_j w_j * 2*ln(cutoff/m_j).

    No threshold truncation is applied: with the default set and a
    Planck-scale cutoff every mass sits far below the cutoff anyway.
    """
    if len(particles) == 0:
        raise DomainError("alpha_inverse_zero of an empty particle set is undefined")
    log_cutoff = cutoff.resolved_log(constants)
    return math.fsum(weighted_log_terms(particles, log_cutoff)) / (3.0 * math.pi)


def _landau_gap(particles: ParticleSet, log_mass: float, alpha0_inverse: float) -> float:
    return math.fsum(weighted_log_terms(particles, log_mass)) / (3.0 * math.pi) - alpha0_inverse


def landau_pole(
    particles: ParticleSet,
    alpha0_inverse: float,
    verify: bool = True,
) -> LandauPoleResult:
    """Solve (1/3pi) * sum_j w_j * 2*ln(Lambda/m_j) = alpha0_inverse.

    The left side is affine and strictly increasing in ln(Lambda), so the
    solution is closed-form:

        ln(Lambda) = 3*pi*alpha0_inverse/(2*W) + (sum_j w_j ln m_j)/W

    With ``verify`` a bisection on the same equation must agree to a
    relative 1e-12 in ln(Lambda); disagreement means a weight-sum bug and
    raises. ``iterations`` counts the bisection steps (0 when skipped).
    """
    if len(particles) == 0:
        raise DomainError("Landau pole of an empty particle set is undefined")
    total_weight = particles.weight_sum
    if total_weight == 0:
        raise DomainError("Landau pole undefined: no charged particles in the set")
    if not alpha0_inverse > 0:
        raise DomainError(f"alpha0_inverse must be > 0, got {alpha0_inverse!r}")

    w = float(total_weight)
    mass_part = math.fsum(float(p.weight) * math.log(p.mass_gev) for p in particles)
    log_pole = 3.0 * math.pi * alpha0_inverse / (2.0 * w) + mass_part / w

    iterations = 0
    if verify:
        log_bisect, iterations = _bisect_landau(particles, alpha0_inverse, log_pole)
        if abs(log_bisect - log_pole) > 1e-12 * max(1.0, abs(log_pole)):
            raise DomainError(
                "Landau-pole cross-check failed: closed form"
                f" {log_pole!r} vs bisection {log_bisect!r}"
            )

    try:
        mass = math.exp(log_pole)
    except OverflowError:
        mass = math.inf
    residual = _landau_gap(particles, log_pole, alpha0_inverse)
    return LandauPoleResult(
        cutoff_mass_gev=mass,
        log_cutoff_mass_gev=log_pole,
        residual=residual,
        iterations=iterations,
    )


def _bisect_landau(
    particles: ParticleSet, alpha0_inverse: float, hint: float
) -> tuple[float, int]:
    # The gap is increasing in log mass; bracket around the closed-form hint.
    lo, hi = hint - 2.0, hint + 2.0
    while _landau_gap(particles, lo, alpha0_inverse) > 0:
        lo -= 10.0
    while _landau_gap(particles, hi, alpha0_inverse) < 0:
        hi += 10.0
    iterations = 0
    tol = 1e-13 * max(1.0, abs(hint))
    while hi - lo > tol and iterations < 200:
        mid = 0.5 * (lo + hi)
        if _landau_gap(particles, mid, alpha0_inverse) < 0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return 0.5 * (lo + hi), iterations


def zeldovich_alpha_inverse(
    nu: int,
    mass_gev: float,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Uniform-charge inverse coupling (nu/3pi) * ln(hbar*c/(G*m^2)).

    The log argument equals (m_Planck/m)^2, so this is nu identical
    unit-charge species evaluated at the Planck cutoff. A mass at or above
    the Planck mass gives a non-positive value, returned with a warning.
    """
    if not (isinstance(nu, int) and nu >= 1):
        raise DomainError(f"nu must be a positive integer, got {nu!r}")
    if not mass_gev > 0:
        raise DomainError(f"mass must be > 0, got {mass_gev!r}")
    term = 2.0 * (math.log(constants.planck_mass_gev) - math.log(mass_gev))
    result = nu * term / (3.0 * math.pi)
    if result <= 0:
        warnings.warn(
            f"mass {mass_gev!r} GeV is at or above the Planck mass;"
            " the uniform-charge inverse coupling is non-positive",
            RuntimeWarning,
            stacklevel=2,
        )
    return result


def zeldovich_species_count(
    alpha_inverse: float,
    mass_gev: float,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Invert the uniform-charge formula for the species count nu.

    Returns a real number; whether a non-integer count is meaningful is
    the caller's question to answer.
    """
    if not alpha_inverse > 0:
        raise DomainError(f"alpha_inverse must be > 0, got {alpha_inverse!r}")
    if not mass_gev > 0:
        raise DomainError(f"mass must be > 0, got {mass_gev!r}")
    term = 2.0 * (math.log(constants.planck_mass_gev) - math.log(mass_gev))
    if term <= 0:
        raise DomainError(
            f"mass {mass_gev!r} GeV is at or above the Planck mass; species count undefined"
        )
    return 3.0 * math.pi * alpha_inverse / term
