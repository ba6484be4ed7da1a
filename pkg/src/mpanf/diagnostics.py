"""Closed-form MSE-gain formulas and the retrospective out-performance check.

The movement-adjusted forecast's expected in-sample MSE gain over the naive
forecast, as a function of the coefficient alpha, the movement-prediction
accuracy, and the mean absolute increment, is

    gain(alpha) = (4 * alpha * acc - alpha**2 - 2 * alpha) * eps_bar**2

which is strictly concave in alpha and maximized at alpha* = 2 * acc - 1
with maximum (2 * acc - 1)**2 * eps_bar**2.  Out of sample, the anticipated
gain with a coefficient calibrated in-sample is

    2 * (a_in * e_in) * (a_out * e_out) - (a_in * e_in)**2

which is nonnegative exactly when a_out * e_out >= a_in * e_in / 2 — the
retrospective condition evaluated by :func:`retrospective` after a backtest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .movement import accuracy as movement_accuracy
from .series import (
    MovementKind,
    MovementSeries,
    TimeSeries,
    mean_abs_increment,
    movements,
)
from .validation import as_direction_vector, check_equal_length


def alpha_star(acc: float) -> float:
    """Optimal adjustment coefficient for a given movement accuracy."""
    acc = float(acc)
    if not 0.0 <= acc <= 1.0:
        raise ValueError(f"accuracy must lie in [0, 1], got {acc}")
    return 2.0 * acc - 1.0


def delta_mse_in_approx(alpha: float, acc: float, eps_bar: float) -> float:
    """Expected in-sample MSE gain of the adjusted forecast over naive."""
    if eps_bar <= 0:
        raise ValueError(f"eps_bar must be positive, got {eps_bar}")
    return (4.0 * alpha * acc - alpha**2 - 2.0 * alpha) * eps_bar**2


def delta_mse_out_approx(
    alpha_in_star: float,
    eps_bar_in: float,
    alpha_out_star: float,
    eps_bar_out: float,
) -> float:
    """Anticipated out-of-sample MSE gain with an in-sample coefficient."""
    a_in = alpha_in_star * eps_bar_in
    a_out = alpha_out_star * eps_bar_out
    return 2.0 * a_in * a_out - a_in**2


@dataclass(frozen=True)
class RetroDiagnostics:
    """Post-backtest check of whether the adjusted forecast should have
    beaten naive out of sample.

    ``lhs``/``rhs`` are the two sides of the out-performance inequality
    alpha_out* . eps_bar_out >= alpha_in* . eps_bar_in / 2; the anticipated
    MSE gain is nonnegative iff the condition holds (given a positive
    in-sample adjustment).
    """

    alpha_in_star: float
    eps_bar_in: float
    alpha_out_star: float
    eps_bar_out: float
    lhs: float
    rhs: float
    condition_holds: bool
    delta_mse_out_approx: float


def retrospective(
    model,
    out_sample: TimeSeries,
    out_predictions,
    *,
    boundary: float | None = None,
) -> RetroDiagnostics:
    """Evaluate the retrospective condition after an out-of-sample run.

    ``model`` is a fitted movement-adjusted forecaster (providing
    ``alpha_``, ``eps_bar_`` and ``boundary_``); ``out_predictions`` holds
    one direction per out-of-sample forecast step, the first of which steps
    from the in-sample boundary value into the first out-of-sample
    observation.  Out-of-sample accuracy is scored over those N steps, while
    eps_bar_out is the mean absolute increment within the out-of-sample
    window itself (N - 1 increments).
    """
    d = as_direction_vector(out_predictions, "out-of-sample predictions")
    check_equal_length(d, out_sample.values, "predictions and out-of-sample window")
    start = model.boundary_ if boundary is None else float(boundary)
    first = 1 if out_sample.values[0] > start else -1
    inner = movements(out_sample)
    actual = MovementSeries(
        np.concatenate([[first], inner.directions]).astype(np.int8),
        MovementKind.ACTUAL,
        flat=np.concatenate([[out_sample.values[0] == start], inner.flat]),
    )
    predicted = MovementSeries(d, MovementKind.PREDICTED)
    acc_out = movement_accuracy(predicted, actual).accuracy
    a_out = alpha_star(acc_out)
    e_out = mean_abs_increment(out_sample)
    a_in, e_in = float(model.alpha_), float(model.eps_bar_)
    lhs = a_out * e_out
    rhs = 0.5 * a_in * e_in
    return RetroDiagnostics(
        alpha_in_star=a_in,
        eps_bar_in=e_in,
        alpha_out_star=a_out,
        eps_bar_out=e_out,
        lhs=lhs,
        rhs=rhs,
        condition_holds=bool(lhs >= rhs),
        delta_mse_out_approx=delta_mse_out_approx(a_in, e_in, a_out, e_out),
    )
