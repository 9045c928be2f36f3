"""Dielectric model of the quantum vacuum and the one-loop running coupling.

Predicts the vacuum permittivity and the inverse fine-structure constant
from charge-squared sums over the charged elementary particles, evaluates
the one-loop running coupling, and locates its Landau pole.
"""

from .constants import (
    CODATA_2018,
    Cutoff,
    PhysicalConstants,
    load_constants,
    parse_cutoff,
    planck_mass,
    resolve_cutoff,
)
from .dielectric import (
    FudgeFactorReport,
    VacuumPrediction,
    alpha_inverse_model,
    epsilon0_model,
    fudge_factor,
    log_term,
)
from .errors import (
    ConstantsFileError,
    DomainError,
    ParticleTableError,
    VacpolError,
    ValidationError,
)
from .particles import (
    Particle,
    ParticleSet,
    builtin_standard_model,
    charge_weight_sum,
    load_particles,
    serialize_particles,
)
from .report import (
    HeadlineReport,
    SweepSpec,
    SweepTable,
    headline_report,
    report_to_csv,
    report_to_json,
    report_to_table,
    run_sweep,
    sweep_to_csv,
    sweep_to_json,
)
from .running import (
    LandauPoleResult,
    OffShellness,
    RunningPoint,
    alpha_inverse_running,
    alpha_inverse_zero,
    landau_pole,
    zeldovich_alpha_inverse,
    zeldovich_species_count,
)

__version__ = "0.1.0"

__all__ = [
    "CODATA_2018",
    "ConstantsFileError",
    "Cutoff",
    "DomainError",
    "FudgeFactorReport",
    "LandauPoleResult",
    "OffShellness",
    "HeadlineReport",
    "Particle",
    "ParticleSet",
    "ParticleTableError",
    "PhysicalConstants",
    "RunningPoint",
    "SweepSpec",
    "SweepTable",
    "VacpolError",
    "VacuumPrediction",
    "ValidationError",
    "alpha_inverse_model",
    "alpha_inverse_running",
    "alpha_inverse_zero",
    "builtin_standard_model",
    "charge_weight_sum",
    "epsilon0_model",
    "fudge_factor",
    "landau_pole",
    "load_constants",
    "load_particles",
    "log_term",
    "headline_report",
    "parse_cutoff",
    "planck_mass",
    "report_to_csv",
    "report_to_json",
    "report_to_table",
    "resolve_cutoff",
    "run_sweep",
    "serialize_particles",
    "sweep_to_csv",
    "sweep_to_json",
    "zeldovich_alpha_inverse",
    "zeldovich_species_count",
]
