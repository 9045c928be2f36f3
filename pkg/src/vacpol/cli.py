"""Command-line front end.

Usage:
    vacpol alpha0                      # inverse coupling at the Planck cutoff
    vacpol report --out-dir out/       # full report + figures
    vacpol sweep --k2-min 1 --k2-max 1e38 --points 200 --out sweep.csv
    vacpol zeldovich --invert --alpha0 137.036 --mass 0.00051099895

``--particles FILE`` and ``--constants FILE`` are accepted both before and
after the subcommand. Exit codes: 0 success, 1 usage error, 2 particle-table
or constants validation error, 3 numeric/domain error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .constants import CODATA_2018, Cutoff, load_constants, parse_cutoff
from .dielectric import alpha_inverse_model, epsilon0_model, fudge_factor
from .errors import DomainError, ValidationError
from .particles import builtin_standard_model, load_particles, serialize_particles
from .report import (
    SweepSpec,
    headline_report,
    report_to_csv,
    report_to_json,
    report_to_table,
    run_sweep,
    sweep_to_csv,
)
from .running import (
    OffShellness,
    alpha_inverse_running,
    alpha_inverse_zero,
    landau_pole,
    zeldovich_alpha_inverse,
    zeldovich_species_count,
)

_MODES = {"decouple": "decouple_below_threshold", "all": "asymptotic_all"}
_WEIGHTINGS = {"charge2": "charge_squared", "uniform": "uniform"}


class CutoffParam(click.ParamType):
    name = "cutoff"

    def convert(self, value, param, ctx):
        if isinstance(value, Cutoff):
            return value
        try:
            return parse_cutoff(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


CUTOFF = CutoffParam()


def table_options(fn):
    """--particles/--constants, usable after the subcommand as well."""
    fn = click.option(
        "--constants", "constants_path", type=click.Path(path_type=Path), default=None,
        help="Constants override file (key = value lines).",
    )(fn)
    fn = click.option(
        "--particles", "particles_path", type=click.Path(path_type=Path), default=None,
        help="Particle table file (default: built-in Standard Model set).",
    )(fn)
    return fn


def _inputs(ctx, particles_path: Path | None, constants_path: Path | None):
    """Resolve constants, particle set, and source label for one command.

    Command-level paths win over group-level ones.
    """
    constants_path = constants_path or ctx.obj.get("constants_path")
    particles_path = particles_path or ctx.obj.get("particles_path")

    if constants_path is not None:
        if not Path(constants_path).exists():
            raise ValidationError(f"constants file not found: {constants_path}")
        constants = load_constants(Path(constants_path))
    else:
        constants = CODATA_2018

    if particles_path is not None:
        if not Path(particles_path).exists():
            raise ValidationError(f"particle table not found: {particles_path}")
        with open(particles_path, "r", encoding="utf-8") as handle:
            particle_set = load_particles(handle)
        source = str(particles_path)
    else:
        particle_set = builtin_standard_model()
        source = "builtin"
    return constants, particle_set, source


@click.group()
@click.version_option(version=__version__, prog_name="vacpol")
@table_options
@click.pass_context
def cli(ctx, particles_path: Path | None, constants_path: Path | None):
    """Vacuum-polarization calculator: inverse fine-structure constant and
    vacuum permittivity from sums over charged elementary particles, plus
    the one-loop running coupling and its Landau pole."""
    ctx.ensure_object(dict)
    ctx.obj["particles_path"] = particles_path
    ctx.obj["constants_path"] = constants_path


@cli.group("particles")
def particles_group():
    """Inspect or validate the particle table."""


@particles_group.command("list")
@table_options
@click.pass_context
def particles_list(ctx, particles_path, constants_path):
    """Print the active particle table in loadable form."""
    _, pset, _ = _inputs(ctx, particles_path, constants_path)
    click.echo(serialize_particles(pset), nl=False)


@particles_group.command("validate")
@table_options
@click.pass_context
def particles_validate(ctx, particles_path, constants_path):
    """Validate the active particle table and print a summary."""
    _, pset, _ = _inputs(ctx, particles_path, constants_path)
    click.echo(f"rows = {len(pset)}")
    click.echo(f"expanded_count = {pset.expanded_count}")
    click.echo(f"weight_sum = {pset.weight_sum}")
    click.echo("ok")


def _echo_kv(key: str, value) -> None:
    click.echo(f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}")


@cli.command("alpha0")
@table_options
@click.option("--cutoff", type=CUTOFF, default="planck", show_default=True,
              help="'planck' or a mass in GeV.")
@click.option("--weighting", type=click.Choice(sorted(_WEIGHTINGS)), default="charge2",
              show_default=True)
@click.pass_context
def alpha0_cmd(ctx, particles_path, constants_path, cutoff: Cutoff, weighting: str):
    """Inverse coupling at zero momentum for the chosen cutoff.

    Prints the factored form 4*pi*f*W for the chosen weighting next to the
    direct log-sum value; the two coincide for charge-squared weighting.
    """
    constants, pset, _ = _inputs(ctx, particles_path, constants_path)
    f_report = fudge_factor(pset, cutoff, _WEIGHTINGS[weighting], constants)
    _echo_kv("cutoff_mass_gev", f_report.cutoff_mass_gev)
    _echo_kv("weighting", f_report.weighting)
    _echo_kv("weight_sum", pset.weight_sum)
    _echo_kv("f", f_report.f)
    _echo_kv("alpha_inverse_model", alpha_inverse_model(pset, f_report.f))
    _echo_kv("alpha_inverse_zero", alpha_inverse_zero(pset, cutoff, constants))


@cli.command("running")
@table_options
@click.option("--k2", "k2_gev2", type=float, required=True, help="|k^2| in GeV^2.")
@click.option("--mode", type=click.Choice(sorted(_MODES)), default="decouple",
              show_default=True)
@click.option("--alpha0", type=float, default=None,
              help="alpha^-1(0); defaults to the measured value.")
@click.pass_context
def running_cmd(ctx, particles_path, constants_path, k2_gev2: float, mode: str,
                alpha0: float | None):
    """Running inverse coupling at one off-shellness."""
    constants, pset, _ = _inputs(ctx, particles_path, constants_path)
    alpha0 = constants.alpha_inverse_measured if alpha0 is None else alpha0
    point = alpha_inverse_running(OffShellness(k2_gev2), pset, alpha0, _MODES[mode])
    _echo_kv("k2_abs_gev2", point.k2_abs_gev2)
    _echo_kv("alpha0_inverse", alpha0)
    _echo_kv("mode", _MODES[mode])
    _echo_kv("alpha_inverse", point.alpha_inverse)
    _echo_kv("included_weight", point.included_weight)


@cli.command("sweep")
@table_options
@click.option("--k2-min", type=float, required=True)
@click.option("--k2-max", type=float, required=True)
@click.option("--points", type=int, required=True)
@click.option("--mode", type=click.Choice(sorted(_MODES)), default="decouple",
              show_default=True)
@click.option("--alpha0", type=float, default=None,
              help="alpha^-1(0); defaults to the measured value.")
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True,
              help="Output CSV path.")
@click.option("--plot", "plot_path", type=click.Path(path_type=Path), default=None,
              help="Also render the sweep as a PNG figure.")
@click.pass_context
def sweep_cmd(ctx, particles_path, constants_path, k2_min: float, k2_max: float,
              points: int, mode: str, alpha0: float | None, out_path: Path,
              plot_path: Path | None):
    """Evaluate the running coupling on a log-spaced |k^2| grid."""
    constants, pset, source = _inputs(ctx, particles_path, constants_path)
    alpha0 = constants.alpha_inverse_measured if alpha0 is None else alpha0
    table = run_sweep(
        SweepSpec(k2_min, k2_max, points), pset, alpha0, _MODES[mode],
        particle_source=source,
    )
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(sweep_to_csv(table), encoding="utf-8")
    click.echo(f"wrote {out_path}")
    if plot_path is not None:
        from .figures import sweep_figure

        sweep_figure(table, plot_path)
        click.echo(f"wrote {plot_path}")


@cli.command("landau")
@table_options
@click.option("--alpha0", type=float, default=None,
              help="alpha^-1(0); defaults to the measured value.")
@click.pass_context
def landau_cmd(ctx, particles_path, constants_path, alpha0: float | None):
    """Locate the Landau pole for the active particle set."""
    constants, pset, _ = _inputs(ctx, particles_path, constants_path)
    alpha0 = constants.alpha_inverse_measured if alpha0 is None else alpha0
    pole = landau_pole(pset, alpha0)
    _echo_kv("alpha0_inverse", alpha0)
    _echo_kv("log_cutoff_mass_gev", pole.log_cutoff_mass_gev)
    _echo_kv("cutoff_mass_gev", f"{pole.cutoff_mass_gev:.12e}")
    _echo_kv("residual", pole.residual)
    _echo_kv("iterations", pole.iterations)


@cli.command("f-factor")
@table_options
@click.option("--cutoff", type=CUTOFF, default="planck", show_default=True)
@click.option("--weighting", type=click.Choice(sorted(_WEIGHTINGS)), default="charge2",
              show_default=True)
@click.pass_context
def f_factor_cmd(ctx, particles_path, constants_path, cutoff: Cutoff, weighting: str):
    """The order-unity factor f: averaged cutoff logarithm over 12*pi^2."""
    constants, pset, _ = _inputs(ctx, particles_path, constants_path)
    f_report = fudge_factor(pset, cutoff, _WEIGHTINGS[weighting], constants)
    _echo_kv("cutoff_mass_gev", f_report.cutoff_mass_gev)
    _echo_kv("weighting", f_report.weighting)
    _echo_kv("mean_log", f_report.mean_log)
    _echo_kv("f", f_report.f)
    for name, term in f_report.per_particle_logs:
        _echo_kv(f"log_term.{name}", term)


@cli.command("epsilon0")
@table_options
@click.option("--cutoff", type=CUTOFF, default="planck", show_default=True)
@click.option("--weighting", type=click.Choice(sorted(_WEIGHTINGS)), default="charge2",
              show_default=True)
@click.pass_context
def epsilon0_cmd(ctx, particles_path, constants_path, cutoff: Cutoff, weighting: str):
    """Vacuum permittivity predicted from the charge-squared sum."""
    constants, pset, _ = _inputs(ctx, particles_path, constants_path)
    f_report = fudge_factor(pset, cutoff, _WEIGHTINGS[weighting], constants)
    prediction = epsilon0_model(pset, f_report.f, constants)
    _echo_kv("f", f_report.f)
    _echo_kv("epsilon0_model_si", prediction.epsilon0_model_si)
    _echo_kv("epsilon0_measured_si", constants.epsilon0_si)
    _echo_kv("epsilon0_ratio_to_measured", prediction.epsilon0_ratio_to_measured)
    _echo_kv("alpha_inverse_model", prediction.alpha_inverse_model)


@cli.command("zeldovich")
@table_options
@click.option("--nu", type=int, default=None, help="Number of identical species.")
@click.option("--mass", "mass_gev", type=float, required=True, help="Species mass in GeV.")
@click.option("--invert", is_flag=True, default=False,
              help="Solve for the species count instead.")
@click.option("--alpha0", type=float, default=None,
              help="alpha^-1 target for --invert.")
@click.pass_context
def zeldovich_cmd(ctx, particles_path, constants_path, nu: int | None, mass_gev: float,
                  invert: bool, alpha0: float | None):
    """Uniform-charge formula: alpha^-1 from nu species, or its inverse."""
    constants, _, _ = _inputs(ctx, particles_path, constants_path)
    if invert:
        if alpha0 is None:
            raise click.UsageError("--invert requires --alpha0")
        count = zeldovich_species_count(alpha0, mass_gev, constants)
        _echo_kv("alpha_inverse", alpha0)
        _echo_kv("mass_gev", mass_gev)
        _echo_kv("nu", count)
    else:
        if nu is None:
            raise click.UsageError("provide --nu, or --invert with --alpha0")
        value = zeldovich_alpha_inverse(nu, mass_gev, constants)
        _echo_kv("nu", nu)
        _echo_kv("mass_gev", mass_gev)
        _echo_kv("alpha_inverse", value)


@cli.command("report")
@table_options
@click.option("--cutoff", type=CUTOFF, default="planck", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "table"]),
              default="table", show_default=True)
@click.option("--out-dir", type=click.Path(path_type=Path), default=None,
              help="Write the report plus figures into this directory.")
@click.pass_context
def report_cmd(ctx, particles_path, constants_path, cutoff: Cutoff, fmt: str,
               out_dir: Path | None):
    """Headline report: per-particle logs, f, inverse coupling both ways,
    permittivity ratio, Landau pole, and the uniform-charge species count.

    With --out-dir the delimited report lands next to two rendered
    figures (per-particle logs, running-coupling curve)."""
    constants, pset, source = _inputs(ctx, particles_path, constants_path)
    report = headline_report(pset, cutoff, constants)

    renderers = {"csv": report_to_csv, "json": report_to_json, "table": report_to_table}
    text = renderers[fmt](report)

    if out_dir is None:
        click.echo(text, nl=False)
        return

    from .figures import default_report_sweep_span, report_figures

    out_dir.mkdir(parents=True, exist_ok=True)
    suffix = {"csv": "csv", "json": "json", "table": "txt"}[fmt]
    report_path = out_dir / f"report.{suffix}"
    report_path.write_text(text, encoding="utf-8")

    k2_lo, k2_hi = default_report_sweep_span(report)
    table = run_sweep(
        SweepSpec(k2_lo, k2_hi, 400), pset, constants.alpha_inverse_measured,
        "asymptotic_all", particle_source=source,
    )
    paths = [report_path] + report_figures(report, table, out_dir)
    for path in paths:
        click.echo(f"wrote {path}")


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    try:
        cli.main(args=argv, standalone_mode=False, prog_name="vacpol")
    except click.exceptions.Exit as exc:  # --help / --version
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
