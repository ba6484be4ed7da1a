"""End-to-end backtest orchestration: ingest, align, split, forecast, score.

For each configured target series the pipeline is: load the target and the
shared exogenous CSV, align them on the target calendar, truncate to the
most recent window, split chronologically, derive movement predictions from
the exogenous series (one per target step), fit every configured method on
the in-sample window, roll each over the out-of-sample window, and score
with all four metrics.  Series are independent: one failing series is
recorded and the rest still run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .config import ExperimentConfig, SeriesSpec
from .diagnostics import RetroDiagnostics, retrospective
from .errors import ExperimentError
from .forecasters import METHODS, ForecastSeries, MpanfForecaster, rolling_forecast
from .ingest import align, load_csv, truncate_tail
from .metrics import EvalReport, evaluate
from .movement import accuracy, comovement_predict
from .series import (
    MovementKind,
    MovementSeries,
    SplitSeries,
    TimeSeries,
    mean_abs_increment,
    movements,
    split,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesStats:
    """Summary statistics of one full (truncated) target series, plus the
    in-sample movement-prediction quality."""

    name: str
    count: int
    minimum: float
    median: float
    maximum: float
    acc_in: float
    eps_bar_in: float
    flat_steps_in: int


@dataclass(frozen=True)
class SeriesResult:
    """Everything computed for one target series."""

    name: str
    stats: SeriesStats
    forecasts: dict[str, ForecastSeries]
    metrics: dict[str, EvalReport]
    retro: RetroDiagnostics
    out_dates: np.ndarray
    out_actuals: np.ndarray
    dropped_exo_rows: int
    filled_target_rows: int


@dataclass(frozen=True)
class ExperimentReport:
    """Per-series results in configured order, plus any per-series failures."""

    results: tuple[SeriesResult, ...]
    failures: tuple[ExperimentError, ...] = ()
    methods: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


class _Stage:
    """Context manager that wraps stage errors with series/stage info."""

    def __init__(self, series: str, stage: str):
        self.series = series
        self.stage = stage

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and not isinstance(exc, ExperimentError):
            raise ExperimentError(self.series, self.stage, exc) from exc
        return False


def _series_stats(name: str, full: TimeSeries, in_sample: TimeSeries, acc_report) -> SeriesStats:
    return SeriesStats(
        name=name,
        count=len(full),
        minimum=float(np.min(full.values)),
        median=float(np.median(full.values)),
        maximum=float(np.max(full.values)),
        acc_in=acc_report.accuracy,
        eps_bar_in=mean_abs_increment(in_sample),
        flat_steps_in=acc_report.flat_step_count,
    )


def run_series(
    spec: SeriesSpec,
    exogenous_raw,
    *,
    truncate_length: int,
    split_fraction: float,
    methods: tuple[str, ...],
) -> SeriesResult:
    """Run the full pipeline for one target series."""
    with _Stage(spec.name, "load"):
        target_raw = load_csv(spec.path, value_column=spec.value_column, name=spec.name)
    with _Stage(spec.name, "align"):
        pair = align(target_raw, exogenous_raw)
    with _Stage(spec.name, "truncate"):
        pair = truncate_tail(pair, truncate_length)
    with _Stage(spec.name, "split"):
        parts: SplitSeries = split(pair.target, split_fraction)
    m = parts.n_in

    with _Stage(spec.name, "predict"):
        predicted = comovement_predict(pair.exogenous)
        d_in = MovementSeries(
            predicted.directions[: m - 1], MovementKind.PREDICTED
        )
        d_out = MovementSeries(predicted.directions[m - 1 :], MovementKind.PREDICTED)
        acc_report = accuracy(d_in, movements(parts.in_sample))

    with _Stage(spec.name, "stats"):
        stats = _series_stats(spec.name, pair.target, parts.in_sample, acc_report)

    forecasts: dict[str, ForecastSeries] = {}
    metrics: dict[str, EvalReport] = {}
    mpanf_model = None
    for name in methods:
        cls = METHODS[name]
        est = cls()
        with _Stage(spec.name, f"fit:{name}"):
            if est.requires_directions:
                est.fit(parts.in_sample, d_in)
            else:
                est.fit(parts.in_sample)
        with _Stage(spec.name, f"forecast:{name}"):
            fs = rolling_forecast(
                est,
                parts.out_sample,
                directions=d_out if est.requires_directions else None,
                boundary=parts.boundary_value,
            )
            forecasts[name] = fs
        with _Stage(spec.name, f"evaluate:{name}"):
            metrics[name] = evaluate(parts.out_sample, fs)
        if isinstance(est, MpanfForecaster):
            mpanf_model = est

    with _Stage(spec.name, "retrospective"):
        if mpanf_model is None:
            mpanf_model = MpanfForecaster().fit(parts.in_sample, d_in)
        retro = retrospective(
            mpanf_model, parts.out_sample, d_out, boundary=parts.boundary_value
        )

    return SeriesResult(
        name=spec.name,
        stats=stats,
        forecasts=forecasts,
        metrics=metrics,
        retro=retro,
        out_dates=parts.out_sample.dates,
        out_actuals=parts.out_sample.values,
        dropped_exo_rows=pair.dropped_exo_rows,
        filled_target_rows=pair.filled_target_rows,
    )


def _run_all(config: ExperimentConfig, methods: tuple[str, ...]) -> ExperimentReport:
    exo = config.exogenous_spec
    with _Stage(exo.name, "load"):
        exogenous_raw = load_csv(exo.path, value_column=exo.value_column, name=exo.name)
    results: list[SeriesResult] = []
    failures: list[ExperimentError] = []
    for spec in config.series_specs:
        try:
            results.append(
                run_series(
                    spec,
                    exogenous_raw,
                    truncate_length=config.truncate_length,
                    split_fraction=config.split_fraction,
                    methods=methods,
                )
            )
        except ExperimentError as err:
            logger.warning(
                "series %s failed at stage %s: %s", err.series, err.stage, err.cause
            )
            failures.append(err)
    return ExperimentReport(
        results=tuple(results), failures=tuple(failures), methods=methods
    )


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Run every configured series; capture per-series failures.

    Deterministic given the config and input files.  A series that fails at
    any stage contributes an ExperimentError instead of a result; the
    remaining series are unaffected.  Failure to load the shared exogenous
    file aborts the whole run (every series would fail identically).
    """
    return _run_all(config, tuple(config.methods))


def collect_stats(config: ExperimentConfig) -> ExperimentReport:
    """Ingest and summarize only: no forecasting methods are run.

    The report's results carry series statistics and retrospective
    diagnostics with empty forecast/metric maps.
    """
    return _run_all(config, ())
