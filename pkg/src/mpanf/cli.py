"""Command-line interface: backtest runs, Monte Carlo validation, summaries.

Subcommands:

* ``run``   — full backtest over the configured series; writes the display
  tables, ``raw.csv``, and per-series forecast files.
* ``stats`` — ingestion and summary statistics only.
* ``mc``    — Monte Carlo validation of the closed-form MSE-gain formulas
  over a grid of prediction accuracies; writes ``mc.csv``.

Exit status is nonzero when any configured series fails; partial reports
are still written.
"""

from __future__ import annotations

import numpy as np
import click

from .config import ConfigError, apply_overrides, load_config
from .errors import ExperimentError, MpanfError
from .experiment import collect_stats, run_experiment
from .report import emit_report, emit_stats
from .report import emit_mc as _emit_mc
from .simulate import MAGNITUDE_DISTS, condition_agreement, monte_carlo_validate


def _parse_methods(value: str | None) -> tuple[str, ...] | None:
    if value is None:
        return None
    return tuple(m.strip() for m in value.split(",") if m.strip())


def _load(config_path, out_dir, methods, seed, truncate_length, split_fraction):
    try:
        config = load_config(config_path)
        return apply_overrides(
            config,
            output_dir=out_dir,
            methods=_parse_methods(methods),
            seed=seed,
            truncate_length=truncate_length,
            split_fraction=split_fraction,
        )
    except (ConfigError, OSError) as err:
        raise click.ClickException(str(err)) from err


def _report_failures(report) -> None:
    for failure in report.failures:
        click.echo(
            f"FAILED: series {failure.series!r} at stage {failure.stage!r}: "
            f"{failure.cause}",
            err=True,
        )


config_option = click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Experiment config file.",
)
out_option = click.option(
    "--out", "out_dir", default=None, help="Output directory (overrides config)."
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "markdown"]),
    default="csv",
    show_default=True,
    help="Also write markdown twins of the display tables.",
)


@click.group()
def main():
    """Movement-adjusted naive forecasting: backtests and validation."""


@main.command()
@config_option
@out_option
@format_option
@click.option("--methods", default=None, help="Comma-separated method subset.")
@click.option("--seed", type=int, default=None, help="Override config seed.")
@click.option("--truncate-length", type=int, default=None, help="Window length.")
@click.option("--split-fraction", type=float, default=None, help="In-sample fraction.")
def run(config_path, out_dir, fmt, methods, seed, truncate_length, split_fraction):
    """Run the full backtest and write all report files."""
    config = _load(config_path, out_dir, methods, seed, truncate_length, split_fraction)
    try:
        report = run_experiment(config)
        written = emit_report(report, config.output_dir, fmt)
    except (ExperimentError, MpanfError, OSError) as err:
        raise click.ClickException(str(err)) from err
    for path in written:
        click.echo(path)
    if report.failures:
        _report_failures(report)
        raise SystemExit(1)


@main.command()
@config_option
@out_option
@format_option
@click.option("--truncate-length", type=int, default=None, help="Window length.")
@click.option("--split-fraction", type=float, default=None, help="In-sample fraction.")
def stats(config_path, out_dir, fmt, truncate_length, split_fraction):
    """Write the summary-statistics table only (no forecasting)."""
    config = _load(config_path, out_dir, None, None, truncate_length, split_fraction)
    try:
        report = collect_stats(config)
        written = emit_stats(report, config.output_dir, fmt)
    except (ExperimentError, MpanfError, OSError) as err:
        raise click.ClickException(str(err)) from err
    for path in written:
        click.echo(path)
    if report.failures:
        _report_failures(report)
        raise SystemExit(1)


@main.command()
@click.option("--out", "out_dir", default="out", show_default=True)
@click.option("--n", type=int, default=100_000, show_default=True, help="Walk length.")
@click.option(
    "--p-grid",
    default="0.5,0.55,0.6,0.7,0.8,0.9",
    show_default=True,
    help="Comma-separated prediction accuracies.",
)
@click.option("--trials", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--dist",
    type=click.Choice(sorted(MAGNITUDE_DISTS)),
    default="folded-normal",
    show_default=True,
    help="Step magnitude distribution.",
)
def mc(out_dir, n, p_grid, trials, seed, dist):
    """Validate the closed-form MSE-gain formulas by simulation."""
    try:
        p_values = [float(p) for p in p_grid.split(",") if p.strip()]
    except ValueError as err:
        raise click.ClickException(f"bad --p-grid: {err}") from err
    rows = []
    for p in p_values:
        try:
            rep = monte_carlo_validate(n, p, trials, seed, magnitude_dist=dist)
            rate = condition_agreement(n, p, trials, seed, magnitude_dist=dist)
        except (MpanfError, ValueError) as err:
            raise click.ClickException(f"p={p}: {err}") from err
        rows.append(
            {
                "p": p,
                "n": n,
                "trials": trials,
                "seed": seed,
                "predicted": rep.predicted_delta_mse_in,
                "empirical": rep.empirical_delta_mse_in,
                "relative_gap": rep.relative_gap,
                "median_trial_gap": float(np.median(rep.trial_gaps)),
                "agreement_rate": rate,
            }
        )
    path = _emit_mc(rows, out_dir)
    click.echo(path)


if __name__ == "__main__":
    main()
