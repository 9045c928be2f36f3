"""Dielectric picture of the vacuum: log terms, the order-unity factor f,
and the permittivity / inverse-coupling predictions built from them.

The central objects are the per-particle logarithms L_j = 2*ln(cutoff/m_j).
Averaging them (charge-squared weighted by default) and dividing by 12*pi^2
gives f; 4*pi*f*W is then the model's inverse fine-structure constant, and
f*W*e^2/(hbar*c) its vacuum permittivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import CODATA_2018, Cutoff, PhysicalConstants, resolve_cutoff
from .errors import DomainError
from .particles import Particle, ParticleSet

__all__ = [
    "WEIGHTINGS",
    "FudgeFactorReport",
    "VacuumPrediction",
    "log_term",
    "fudge_factor",
    "alpha_inverse_model",
    "epsilon0_model",
]

WEIGHTINGS = ("charge_squared", "uniform")


def log_term_from_log_cutoff(particle: Particle, log_cutoff_mass: float) -> float:
    """L = 2*(ln cutoff - ln m); the log-space form safe for huge cutoffs."""
    return 2.0 * (log_cutoff_mass - math.log(particle.mass_gev))


def log_term(particle: Particle, cutoff_mass_gev: float) -> float:
    """Cutoff-to-mass logarithm 2*ln(cutoff/m).

    Negative when the particle is heavier than the cutoff; callers that
    report such values flag them rather than reject them.
    """
    if not cutoff_mass_gev > 0:
        raise DomainError(f"cutoff mass must be > 0, got {cutoff_mass_gev!r}")
    return log_term_from_log_cutoff(particle, math.log(cutoff_mass_gev))


@dataclass(frozen=True)
class FudgeFactorReport:
    """f together with the per-particle logs it was averaged from."""

    f: float
    weighting: str
    per_particle_logs: tuple[tuple[str, float], ...]
    cutoff_mass_gev: float
    log_cutoff_mass_gev: float

    @property
    def mean_log(self) -> float:
        return self.f * 12.0 * math.pi ** 2


def fudge_factor(
    particles: ParticleSet,
    cutoff: Cutoff = Cutoff.planck(),
    weighting: str = "charge_squared",
    constants: PhysicalConstants = CODATA_2018,
) -> FudgeFactorReport:
    """Average of the log terms over the set, divided by 12*pi^2.

    ``charge_squared`` weights each row by multiplicity*(q/e)^2, which makes
    4*pi*f*W coincide with the direct log-sum inverse coupling; ``uniform``
    is a plain mean over the expanded entries, kept for sensitivity checks.
    """
    if weighting not in WEIGHTINGS:
        raise ValueError(f"weighting must be one of {WEIGHTINGS}, got {weighting!r}")
    if len(particles) == 0:
        raise DomainError("fudge factor of an empty particle set is undefined")

    log_cutoff = cutoff.resolved_log(constants)
    terms = [(p.name, log_term_from_log_cutoff(p, log_cutoff)) for p in particles]

    if weighting == "charge_squared":
        total_weight = particles.weight_sum
        if total_weight == 0:
            raise DomainError("charge-squared weighting needs at least one charged particle")
        numerator = math.fsum(float(p.weight) * t for p, (_, t) in zip(particles, terms))
        mean = numerator / float(total_weight)
    else:
        numerator = math.fsum(p.multiplicity * t for p, (_, t) in zip(particles, terms))
        mean = numerator / particles.expanded_count

    return FudgeFactorReport(
        f=mean / (12.0 * math.pi ** 2),
        weighting=weighting,
        per_particle_logs=tuple(terms),
        cutoff_mass_gev=resolve_cutoff(cutoff, constants),
        log_cutoff_mass_gev=log_cutoff,
    )


def alpha_inverse_model(particles: ParticleSet, f: float) -> float:
    """Model inverse coupling 4*pi*f*W."""
    if len(particles) == 0:
        raise DomainError("alpha_inverse_model of an empty particle set is undefined")
    if not f > 0:
        raise DomainError(f"f must be > 0, got {f!r}")
    return 4.0 * math.pi * f * float(particles.weight_sum)


@dataclass(frozen=True)
class VacuumPrediction:
    epsilon0_model_si: float
    epsilon0_ratio_to_measured: float
    alpha_inverse_model: float


def epsilon0_model(
    particles: ParticleSet,
    f: float,
    constants: PhysicalConstants = CODATA_2018,
) -> VacuumPrediction:
    """Vacuum permittivity f*W*e^2/(hbar*c) in SI units.

    Also reports the ratio against the measured permittivity and the model
    inverse coupling for the same f. Linear in W at fixed f.
    """
    if len(particles) == 0:
        raise DomainError("epsilon0_model of an empty particle set is undefined")
    if not f > 0:
        raise DomainError(f"f must be > 0, got {f!r}")
    weight = particles.weight_sum
    if weight == 0:
        raise DomainError("epsilon0_model needs at least one charged particle")

    w = float(weight)
    eps = f * w * constants.elementary_charge_si ** 2 / constants.hbar_c_joule_metre
    return VacuumPrediction(
        epsilon0_model_si=eps,
        epsilon0_ratio_to_measured=eps / constants.epsilon0_si,
        alpha_inverse_model=4.0 * math.pi * f * w,
    )


def weighted_log_terms(particles: ParticleSet, log_cutoff_mass: float) -> list[float]:
    """Per-row products w_j * L_j; shared so dual routes sum identical terms."""
    return [
        float(p.weight) * log_term_from_log_cutoff(p, log_cutoff_mass) for p in particles
    ]
