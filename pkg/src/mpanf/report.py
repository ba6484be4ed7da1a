"""Report emission: paper-style display tables plus full-precision data.

Six display tables (stats, rmse, mae, mape, smape, retro) are written as
CSV with values rounded to 4 decimals; the same numbers at full precision
go to ``raw.csv`` in long form (table, series, field, value), and each
series gets a ``forecasts_<name>.csv`` with date, actual, and one column
per method for external plotting.  With ``format="markdown"`` the six
display tables additionally get ``.md`` twins.  Output is byte-identical
across runs on identical inputs: fixed orderings, no timestamps.
"""

from __future__ import annotations

import csv
import os

from .experiment import ExperimentReport

DISPLAY_DECIMALS = 4

METRIC_TABLES = ("rmse", "mae", "mape", "smape")


def _display(x) -> str:
    if isinstance(x, bool):
        return "satisfied" if x else "violated"
    if isinstance(x, (int,)):
        return str(x)
    return f"{float(x):.{DISPLAY_DECIMALS}f}"


def _raw(x) -> str:
    if isinstance(x, bool):
        return "satisfied" if x else "violated"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def _write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_markdown(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="") as handle:
        handle.write("| " + " | ".join(header) + " |\n")
        handle.write("|" + "|".join(" --- " for _ in header) + "|\n")
        for row in rows:
            handle.write("| " + " | ".join(row) + " |\n")


def _stats_rows(report: ExperimentReport, fmt) -> tuple[list[str], list[list[str]]]:
    header = ["series", "count", "min", "median", "max", "acc_in", "eps_bar_in"]
    rows = []
    for result in report.results:
        s = result.stats
        rows.append(
            [s.name, str(s.count)]
            + [fmt(v) for v in (s.minimum, s.median, s.maximum, s.acc_in, s.eps_bar_in)]
        )
    return header, rows


def _metric_rows(report, metric, fmt):
    header = ["series"] + list(report.methods)
    rows = []
    for result in report.results:
        rows.append(
            [result.name]
            + [fmt(getattr(result.metrics[m], metric)) for m in report.methods]
        )
    return header, rows


def _retro_rows(report, fmt):
    header = [
        "series",
        "alpha_in_star",
        "eps_bar_in",
        "alpha_out_star",
        "eps_bar_out",
        "lhs",
        "rhs",
        "condition",
        "delta_mse_out_approx",
    ]
    rows = []
    for result in report.results:
        r = result.retro
        rows.append(
            [result.name]
            + [
                fmt(v)
                for v in (
                    r.alpha_in_star,
                    r.eps_bar_in,
                    r.alpha_out_star,
                    r.eps_bar_out,
                    r.lhs,
                    r.rhs,
                )
            ]
            + [_display(r.condition_holds), fmt(r.delta_mse_out_approx)]
        )
    return header, rows


def _raw_rows(report) -> list[list[str]]:
    rows: list[list[str]] = []
    for result in report.results:
        s = result.stats
        for fld in ("count", "minimum", "median", "maximum", "acc_in", "eps_bar_in"):
            rows.append(["stats", result.name, fld, _raw(getattr(s, fld))])
        rows.append(["stats", result.name, "flat_steps_in", str(s.flat_steps_in)])
        for method in report.methods:
            rep = result.metrics[method]
            for metric in METRIC_TABLES:
                rows.append([metric, result.name, method, _raw(getattr(rep, metric))])
        r = result.retro
        for fld in (
            "alpha_in_star",
            "eps_bar_in",
            "alpha_out_star",
            "eps_bar_out",
            "lhs",
            "rhs",
            "condition_holds",
            "delta_mse_out_approx",
        ):
            rows.append(["retro", result.name, fld, _raw(getattr(r, fld))])
        rows.append(["ingestion", result.name, "dropped_exo_rows", str(result.dropped_exo_rows)])
        rows.append(
            ["ingestion", result.name, "filled_target_rows", str(result.filled_target_rows)]
        )
    return rows


def emit_report(
    report: ExperimentReport, out_dir: str, format: str = "csv"
) -> list[str]:
    """Write all report files into ``out_dir``; returns the paths written."""
    if format not in ("csv", "markdown"):
        raise ValueError(f"format must be 'csv' or 'markdown', got {format!r}")
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    tables = {"stats": _stats_rows(report, _display), "retro": _retro_rows(report, _display)}
    for metric in METRIC_TABLES:
        tables[metric] = _metric_rows(report, metric, _display)
    for name in ("stats", *METRIC_TABLES, "retro"):
        header, rows = tables[name]
        path = os.path.join(out_dir, f"{name}.csv")
        _write_csv(path, header, rows)
        written.append(path)
        if format == "markdown":
            md_path = os.path.join(out_dir, f"{name}.md")
            _write_markdown(md_path, header, rows)
            written.append(md_path)

    raw_path = os.path.join(out_dir, "raw.csv")
    _write_csv(raw_path, ["table", "series", "field", "value"], _raw_rows(report))
    written.append(raw_path)

    for result in report.results:
        header = ["date", "actual"] + list(report.methods)
        rows = []
        for k in range(len(result.out_actuals)):
            rows.append(
                [str(result.out_dates[k]), _raw(float(result.out_actuals[k]))]
                + [
                    _raw(float(result.forecasts[m].predictions[k]))
                    for m in report.methods
                ]
            )
        path = os.path.join(out_dir, f"forecasts_{result.name}.csv")
        _write_csv(path, header, rows)
        written.append(path)

    if report.failures:
        path = os.path.join(out_dir, "failures.csv")
        _write_csv(
            path,
            ["series", "stage", "error"],
            [[f.series, f.stage, str(f.cause)] for f in report.failures],
        )
        written.append(path)
    return written


def emit_stats(report: ExperimentReport, out_dir: str, format: str = "csv") -> list[str]:
    """Write only the summary-statistics table (stats subcommand)."""
    if format not in ("csv", "markdown"):
        raise ValueError(f"format must be 'csv' or 'markdown', got {format!r}")
    os.makedirs(out_dir, exist_ok=True)
    header, rows = _stats_rows(report, _display)
    path = os.path.join(out_dir, "stats.csv")
    _write_csv(path, header, rows)
    written = [path]
    if format == "markdown":
        md_path = os.path.join(out_dir, "stats.md")
        _write_markdown(md_path, header, rows)
        written.append(md_path)
    return written


def emit_mc(rows: list[dict], out_dir: str) -> str:
    """Write the Monte Carlo table (one row per accuracy level) to mc.csv."""
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "mc.csv")
    header = [
        "p",
        "n",
        "trials",
        "seed",
        "predicted_delta_mse",
        "empirical_delta_mse",
        "relative_gap",
        "median_trial_gap",
        "condition_agreement_rate",
    ]
    out_rows = []
    for row in rows:
        out_rows.append(
            [
                _raw(float(row["p"])),
                str(row["n"]),
                str(row["trials"]),
                str(row["seed"]),
                _raw(float(row["predicted"])),
                _raw(float(row["empirical"])),
                _raw(float(row["relative_gap"])),
                _raw(float(row["median_trial_gap"])),
                _raw(float(row["agreement_rate"])),
            ]
        )
    _write_csv(path, header, out_rows)
    return path
