"""Movement-prediction-adjusted naive forecasting toolkit.

Shifts the naive (random-walk) forecast by a calibrated fraction of the
mean absolute increment in the direction predicted by an external movement
signal, alongside standard baselines, error metrics, closed-form gain
diagnostics, and a reproducible backtest CLI.
"""

from .config import ExperimentConfig, SeriesSpec, load_config
from .diagnostics import (
    RetroDiagnostics,
    alpha_star,
    delta_mse_in_approx,
    delta_mse_out_approx,
    retrospective,
)
from .errors import MpanfError
from .forecasters import (
    METHODS,
    BaseForecaster,
    DriftForecaster,
    ForecastSeries,
    Ima11Forecaster,
    LinRegForecaster,
    MpanfForecaster,
    NaiveForecaster,
    rolling_forecast,
)
from .ingest import AlignedPair, RawSeries, align, load_csv, truncate_tail
from .metrics import EvalReport, evaluate, mae, mape, rmse, smape
from .movement import AccuracyReport, accuracy, comovement_predict
from .series import (
    MovementKind,
    MovementSeries,
    SplitSeries,
    TimeSeries,
    increments,
    mean_abs_increment,
    movements,
    split,
)
from .simulate import McReport, condition_agreement, monte_carlo_validate, synth_walk
from .experiment import ExperimentReport, SeriesResult, SeriesStats, run_experiment
from .report import emit_report

__version__ = "0.1.0"

__all__ = [
    "AccuracyReport",
    "AlignedPair",
    "BaseForecaster",
    "DriftForecaster",
    "EvalReport",
    "ExperimentConfig",
    "ExperimentReport",
    "ForecastSeries",
    "Ima11Forecaster",
    "LinRegForecaster",
    "METHODS",
    "McReport",
    "MovementKind",
    "MovementSeries",
    "MpanfError",
    "MpanfForecaster",
    "NaiveForecaster",
    "RawSeries",
    "RetroDiagnostics",
    "SeriesResult",
    "SeriesSpec",
    "SeriesStats",
    "SplitSeries",
    "TimeSeries",
    "accuracy",
    "align",
    "alpha_star",
    "comovement_predict",
    "condition_agreement",
    "delta_mse_in_approx",
    "delta_mse_out_approx",
    "emit_report",
    "evaluate",
    "increments",
    "load_config",
    "load_csv",
    "mae",
    "mape",
    "mean_abs_increment",
    "monte_carlo_validate",
    "movements",
    "retrospective",
    "rmse",
    "rolling_forecast",
    "run_experiment",
    "smape",
    "split",
    "synth_walk",
    "truncate_tail",
]
