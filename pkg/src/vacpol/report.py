"""Sweeps over the running coupling and the headline reproduction report.

Rendering is deterministic by construction: CSV floats carry a fixed 12
significant digits, JSON floats use Python's shortest round-trip repr,
rational weights are printed exactly as ``n/d``, and nothing timestamped
ever enters an output file.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import CODATA_2018, Cutoff, PhysicalConstants, resolve_cutoff
from .dielectric import alpha_inverse_model, epsilon0_model, fudge_factor
from .errors import DomainError
from .particles import ParticleSet
from .running import (
    OffShellness,
    RunningPoint,
    alpha_inverse_running,
    alpha_inverse_zero,
    landau_pole,
    zeldovich_species_count,
)

__all__ = [
    "SweepSpec",
    "SweepTable",
    "run_sweep",
    "sweep_to_csv",
    "sweep_to_json",
    "HeadlineReport",
    "headline_report",
    "report_to_table",
    "report_to_csv",
    "report_to_json",
    "IDENTITY_TOLERANCE",
]

# Eq.(4)-route and direct-log-sum inverse couplings must agree this closely
# before any report is emitted.
IDENTITY_TOLERANCE = 1e-12


def _fmt12(value: float) -> str:
    """Fixed 12-significant-digit form for CSV cells."""
    return f"{value:.11e}"


def _fmt_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SweepSpec:
    """Log-spaced |k^2| grid, inclusive of both endpoints."""

    k2_min_gev2: float
    k2_max_gev2: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if not (0 < self.k2_min_gev2 < self.k2_max_gev2):
            raise DomainError(
                f"need 0 < k2_min < k2_max, got {self.k2_min_gev2!r}, {self.k2_max_gev2!r}"
            )
        if not (isinstance(self.points, int) and self.points >= 2):
            raise DomainError(f"points must be an integer >= 2, got {self.points!r}")
        if self.spacing != "log":
            raise DomainError(f"only log spacing is supported, got {self.spacing!r}")

    def grid(self) -> list[float]:
        lo = math.log(self.k2_min_gev2)
        hi = math.log(self.k2_max_gev2)
        step = (hi - lo) / (self.points - 1)
        values = [math.exp(lo + i * step) for i in range(self.points)]
        # Pin the endpoints to the exact inputs; exp(log(x)) can drift an ulp.
        values[0] = self.k2_min_gev2
        values[-1] = self.k2_max_gev2
        return values


@dataclass(frozen=True)
class SweepTable:
    spec: SweepSpec
    rows: tuple[RunningPoint, ...]
    particle_source: str
    particles_sha256: str
    mode: str
    alpha0_inverse: float


def run_sweep(
    spec: SweepSpec,
    particles: ParticleSet,
    alpha0_inverse: float,
    mode: str = "decouple_below_threshold",
    particle_source: str = "builtin",
) -> SweepTable:
    """Evaluate the running coupling at every grid point, one row each."""
    rows = tuple(
        alpha_inverse_running(OffShellness(k2), particles, alpha0_inverse, mode)
        for k2 in spec.grid()
    )
    return SweepTable(
        spec=spec,
        rows=rows,
        particle_source=particle_source,
        particles_sha256=particles.sha256(),
        mode=mode,
        alpha0_inverse=alpha0_inverse,
    )


def sweep_to_csv(table: SweepTable) -> str:
    lines = ["k2_abs_gev2,alpha_inverse,included_weight"]
    for row in table.rows:
        lines.append(
            f"{_fmt12(row.k2_abs_gev2)},{_fmt12(row.alpha_inverse)},"
            f"{_fmt_fraction(row.included_weight)}"
        )
    return "\n".join(lines) + "\n"


def sweep_to_json(table: SweepTable) -> str:
    payload = {
        "particle_source": table.particle_source,
        "particles_sha256": table.particles_sha256,
        "mode": table.mode,
        "alpha0_inverse": table.alpha0_inverse,
        "points": table.spec.points,
        "rows": [
            {
                "k2_abs_gev2": row.k2_abs_gev2,
                "alpha_inverse": row.alpha_inverse,
                "included_weight": _fmt_fraction(row.included_weight),
            }
            for row in table.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class ParticleReportRow:
    name: str
    mass_gev: float
    weight: Fraction
    log_term: float

    @property
    def heavier_than_cutoff(self) -> bool:
        return self.log_term < 0


@dataclass(frozen=True)
class HeadlineReport:
    """Everything the headline report prints, already computed."""

    cutoff_mass_gev: float
    log_cutoff_mass_gev: float
    weight_sum: Fraction
    expanded_count: int
    per_particle: tuple[ParticleReportRow, ...]
    log_min: float
    log_max: float
    log_spread_percent: float
    f_charge_squared: float
    f_uniform: float
    alpha_inverse_model: float
    alpha_inverse_zero: float
    identity_rel_error: float
    alpha_inverse_measured: float
    epsilon0_model_si: float
    epsilon0_ratio_to_measured: float
    landau_log_mass_gev: float
    landau_mass_gev: float
    landau_residual: float
    landau_iterations: int
    zeldovich_nu: float
    zeldovich_reference_particle: str
    zeldovich_reference_mass_gev: float


def headline_report(
    particles: ParticleSet,
    cutoff: Cutoff = Cutoff.planck(),
    constants: PhysicalConstants = CODATA_2018,
) -> HeadlineReport:
    """Assemble the reproduction report for a particle set.

    Refuses to produce anything if the two inverse-coupling routes (the
    factored-average form and the direct log sum) disagree beyond
    IDENTITY_TOLERANCE; that identity failing means the sums are broken.
    """
    if len(particles) == 0:
        raise DomainError("report of an empty particle set is undefined")
    if particles.weight_sum == 0:
        raise DomainError("report needs at least one charged particle")

    f_cs = fudge_factor(particles, cutoff, "charge_squared", constants)
    f_un = fudge_factor(particles, cutoff, "uniform", constants)
    model = alpha_inverse_model(particles, f_cs.f)
    zero = alpha_inverse_zero(particles, cutoff, constants)
    identity_rel = abs(model - zero) / abs(zero)
    if not identity_rel <= IDENTITY_TOLERANCE:
        raise DomainError(
            f"internal identity check failed: 4*pi*f*W = {model!r} vs"
            f" direct sum {zero!r} (relative {identity_rel:.3e})"
        )

    logs = [t for _, t in f_cs.per_particle_logs]
    log_min, log_max = min(logs), max(logs)
    spread = (log_max - log_min) / log_max * 100.0

    eps = epsilon0_model(particles, f_cs.f, constants)
    pole = landau_pole(particles, constants.alpha_inverse_measured)

    charged = [p for p in particles if p.charge_over_e != 0]
    reference = min(charged, key=lambda p: p.mass_gev)
    nu = zeldovich_species_count(
        constants.alpha_inverse_measured, reference.mass_gev, constants
    )

    rows = tuple(
        ParticleReportRow(
            name=p.name,
            mass_gev=p.mass_gev,
            weight=p.weight,
            log_term=t,
        )
        for p, (_, t) in zip(particles, f_cs.per_particle_logs)
    )
    return HeadlineReport(
        cutoff_mass_gev=resolve_cutoff(cutoff, constants),
        log_cutoff_mass_gev=f_cs.log_cutoff_mass_gev,
        weight_sum=particles.weight_sum,
        expanded_count=particles.expanded_count,
        per_particle=rows,
        log_min=log_min,
        log_max=log_max,
        log_spread_percent=spread,
        f_charge_squared=f_cs.f,
        f_uniform=f_un.f,
        alpha_inverse_model=model,
        alpha_inverse_zero=zero,
        identity_rel_error=identity_rel,
        alpha_inverse_measured=constants.alpha_inverse_measured,
        epsilon0_model_si=eps.epsilon0_model_si,
        epsilon0_ratio_to_measured=eps.epsilon0_ratio_to_measured,
        landau_log_mass_gev=pole.log_cutoff_mass_gev,
        landau_mass_gev=pole.cutoff_mass_gev,
        landau_residual=pole.residual,
        landau_iterations=pole.iterations,
        zeldovich_nu=nu,
        zeldovich_reference_particle=reference.name,
        zeldovich_reference_mass_gev=reference.mass_gev,
    )


def _scalar_items(report: HeadlineReport) -> list[tuple[str, object]]:
    return [
        ("cutoff_mass_gev", report.cutoff_mass_gev),
        ("log_cutoff_mass_gev", report.log_cutoff_mass_gev),
        ("weight_sum", _fmt_fraction(report.weight_sum)),
        ("expanded_count", report.expanded_count),
        ("log_min", report.log_min),
        ("log_max", report.log_max),
        ("log_spread_percent", report.log_spread_percent),
        ("f_charge_squared", report.f_charge_squared),
        ("f_uniform", report.f_uniform),
        ("alpha_inverse_model", report.alpha_inverse_model),
        ("alpha_inverse_zero", report.alpha_inverse_zero),
        ("identity_rel_error", report.identity_rel_error),
        ("alpha_inverse_measured", report.alpha_inverse_measured),
        ("epsilon0_model_si", report.epsilon0_model_si),
        ("epsilon0_ratio_to_measured", report.epsilon0_ratio_to_measured),
        ("landau_log_mass_gev", report.landau_log_mass_gev),
        ("landau_mass_gev", report.landau_mass_gev),
        ("landau_residual", report.landau_residual),
        ("landau_iterations", report.landau_iterations),
        ("zeldovich_nu", report.zeldovich_nu),
        ("zeldovich_reference_particle", report.zeldovich_reference_particle),
        ("zeldovich_reference_mass_gev", report.zeldovich_reference_mass_gev),
    ]


def report_to_csv(report: HeadlineReport) -> str:
    lines = ["item,value"]
    for key, value in _scalar_items(report):
        if isinstance(value, float):
            lines.append(f"{key},{_fmt12(value)}")
        else:
            lines.append(f"{key},{value}")
    for row in report.per_particle:
        lines.append(f"log_term.{row.name},{_fmt12(row.log_term)}")
    return "\n".join(lines) + "\n"


def report_to_json(report: HeadlineReport) -> str:
    payload: dict[str, object] = dict(_scalar_items(report))
    payload["per_particle"] = [
        {
            "name": row.name,
            "mass_gev": row.mass_gev,
            "weight": _fmt_fraction(row.weight),
            "log_term": row.log_term,
            "heavier_than_cutoff": row.heavier_than_cutoff,
        }
        for row in report.per_particle
    ]
    return json.dumps(payload, indent=2) + "\n"


def report_to_table(report: HeadlineReport) -> str:
    lines = []
    lines.append("vacuum dielectric model vs one-loop running coupling")
    lines.append("=" * 52)
    lines.append("")
    lines.append(f"cutoff mass          : {report.cutoff_mass_gev:.6e} GeV"
                 f"  (ln = {report.log_cutoff_mass_gev:.6f})")
    lines.append(f"charge-squared weight: {_fmt_fraction(report.weight_sum)}"
                 f"  ({report.expanded_count} contributing entries)")
    lines.append("")
    lines.append(f"{'particle':<12} {'mass (GeV)':>14} {'weight':>8} {'log term':>12}")
    for row in report.per_particle:
        flag = "  (above cutoff)" if row.heavier_than_cutoff else ""
        lines.append(
            f"{row.name:<12} {row.mass_gev:>14.6e} {_fmt_fraction(row.weight):>8}"
            f" {row.log_term:>12.4f}{flag}"
        )
    lines.append("")
    lines.append(f"log term min/max     : {report.log_min:.4f} / {report.log_max:.4f}"
                 f"  (spread {report.log_spread_percent:.2f}%)")
    lines.append(f"f (charge-squared)   : {report.f_charge_squared:.9f}")
    lines.append(f"f (uniform)          : {report.f_uniform:.9f}")
    lines.append(f"alpha^-1 model 4pifW : {report.alpha_inverse_model:.9f}")
    lines.append(f"alpha^-1 direct sum  : {report.alpha_inverse_zero:.9f}"
                 f"  (identity rel err {report.identity_rel_error:.2e})")
    lines.append(f"alpha^-1 measured    : {report.alpha_inverse_measured:.9f}")
    lines.append(f"epsilon0 model       : {report.epsilon0_model_si:.6e} F/m")
    lines.append(f"epsilon0 / measured  : {report.epsilon0_ratio_to_measured:.6f}")
    lines.append(f"Landau pole          : ln(Lambda/GeV) = {report.landau_log_mass_gev:.9f}"
                 f"  (Lambda = {report.landau_mass_gev:.6e} GeV,"
                 f" residual {report.landau_residual:.2e},"
                 f" iterations {report.landau_iterations})")
    lines.append(f"species count nu     : {report.zeldovich_nu:.6f}"
                 f"  (at measured alpha^-1,"
                 f" {report.zeldovich_reference_particle} mass"
                 f" {report.zeldovich_reference_mass_gev:.6e} GeV)")
    return "\n".join(lines) + "\n"
