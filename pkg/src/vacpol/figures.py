"""Matplotlib rendering for sweep tables and the reproduction report.

Only the CLI report path imports this module; the numeric core never
touches matplotlib.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import HeadlineReport, SweepTable

__all__ = ["sweep_figure", "log_term_figure", "report_figures"]


def sweep_figure(table: SweepTable, path: str | Path) -> Path:
    """Running inverse coupling against |k^2| on a log axis."""
    path = Path(path)
    k2 = [row.k2_abs_gev2 for row in table.rows]
    alpha_inv = [row.alpha_inverse for row in table.rows]

    fig, ax = plt.subplots(figsize=(8.0, 4.8))
    ax.plot(k2, alpha_inv, lw=1.8, color="#2c5282")
    ax.axhline(0.0, color="0.4", lw=0.8, ls="--")
    ax.set_xscale("log")
    ax.set_xlabel(r"$|k^2|$ (GeV$^2$)")
    ax.set_ylabel(r"$\alpha^{-1}$")
    ax.set_title(f"one-loop running ({table.mode}, "
                 f"$\\alpha^{{-1}}_0$ = {table.alpha0_inverse:g})")
    ax.grid(True, which="both", ls=":", lw=0.6, alpha=0.6)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=160)
    plt.close(fig)
    return path


def log_term_figure(report: HeadlineReport, path: str | Path) -> Path:
    """Per-particle cutoff logarithms as a horizontal bar chart."""
    path = Path(path)
    names = [row.name for row in report.per_particle]
    values = [row.log_term for row in report.per_particle]

    fig, ax = plt.subplots(figsize=(7.0, 0.45 * max(len(names), 6) + 1.6))
    ypos = range(len(names))
    ax.barh(list(ypos), values, color="#2c5282")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel(r"$2\,\ln(\Lambda / m)$")
    ax.set_title(f"cutoff logarithms (spread {report.log_spread_percent:.1f}%)")
    ax.grid(True, axis="x", ls=":", lw=0.6, alpha=0.6)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=160)
    plt.close(fig)
    return path


def report_figures(report: HeadlineReport, table: SweepTable, out_dir: str | Path) -> list[Path]:
    """Render the report's standard figure pair into a directory."""
    out_dir = Path(out_dir)
    return [
        log_term_figure(report, out_dir / "log_terms.png"),
        sweep_figure(table, out_dir / "running_coupling.png"),
    ]


def default_report_sweep_span(report: HeadlineReport) -> tuple[float, float]:
    """|k^2| range from below the lightest particle to past the Landau pole."""
    lightest = min(row.mass_gev for row in report.per_particle)
    log_k2_min = 2.0 * (math.log(lightest) - 3.0)
    # Stay clear of float overflow for extreme poles.
    log_k2_max = min(2.0 * report.landau_log_mass_gev + math.log(100.0), 690.0)
    return math.exp(log_k2_min), math.exp(log_k2_max)
