"""Point-forecast error metrics: RMSE, MAE, MAPE, and sMAPE.

RMSE and MAE are in the units of the series; MAPE and sMAPE are percentages.
sMAPE uses the symmetric denominator (|y| + |ŷ|)/2 per point, which bounds
it above by 200.  Zero denominators raise rather than being skipped, so the
reported N always equals the number of evaluated points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroActualError, ZeroPairError
from .validation import as_float_vector, check_equal_length, check_min_length


@dataclass(frozen=True)
class EvalReport:
    """All four metrics for one (actual, predicted) pair of length n."""

    rmse: float
    mae: float
    mape: float
    smape: float
    n: int


def _pair(actual, predicted) -> tuple[np.ndarray, np.ndarray]:
    y = as_float_vector(actual, "actual")
    yhat = as_float_vector(predicted, "predicted")
    check_equal_length(y, yhat, "actual and predicted")
    check_min_length(y, 1, "evaluation window")
    return y, yhat


def rmse(actual, predicted) -> float:
    """Root mean squared error."""
    y, yhat = _pair(actual, predicted)
    return float(np.sqrt(np.mean((y - yhat) ** 2)))


def mae(actual, predicted) -> float:
    """Mean absolute error."""
    y, yhat = _pair(actual, predicted)
    return float(np.mean(np.abs(y - yhat)))


def mape(actual, predicted) -> float:
    """Mean absolute percentage error, in percent; undefined at zero actuals."""
    y, yhat = _pair(actual, predicted)
    if (y == 0).any():
        raise ZeroActualError("MAPE is undefined when an actual value is zero")
    return float(100.0 * np.mean(np.abs((y - yhat) / y)))


def smape(actual, predicted) -> float:
    """Symmetric MAPE, in percent, with per-point denominator (|y|+|ŷ|)/2."""
    y, yhat = _pair(actual, predicted)
    denom = (np.abs(y) + np.abs(yhat)) / 2.0
    if (denom == 0).any():
        raise ZeroPairError(
            "sMAPE is undefined when an actual and its forecast are both zero"
        )
    return float(100.0 * np.mean(np.abs(y - yhat) / denom))


def evaluate(actual, predicted) -> EvalReport:
    """Compute all four metrics at once."""
    y, yhat = _pair(actual, predicted)
    return EvalReport(
        rmse=rmse(y, yhat),
        mae=mae(y, yhat),
        mape=mape(y, yhat),
        smape=smape(y, yhat),
        n=len(y),
    )
