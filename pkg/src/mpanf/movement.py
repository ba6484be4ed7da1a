"""Movement prediction from a co-moving exogenous series, plus scoring.

The bundled predictor is deliberately simple: the sign of the exogenous
series' own step is used directly as the prediction for the target's step
over the same dates (a same-day co-movement rule; the exogenous market
closes before the target's session ends, so its step is known in time).
Any callable producing a predicted MovementSeries of length ``len(target)-1``
can stand in for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import LengthMismatchError
from .series import MovementKind, MovementSeries, TimeSeries, movements
from .validation import as_direction_vector

# A movement predictor maps the aligned exogenous series to predicted
# directions for target steps 1..len-1.
MovementPredictor = Callable[[TimeSeries], MovementSeries]


@dataclass(frozen=True)
class AccuracyReport:
    """Movement-prediction score over a window of steps.

    ``accuracy`` is the fraction of steps whose predicted direction matched
    the actual one.  ``flat_step_count`` counts actual zero increments
    (scored as -1 by the tie convention) and ``up_fraction_predicted`` the
    share of +1 predictions; both are bias diagnostics and do not enter the
    accuracy ratio.
    """

    accuracy: float
    correct_count: int
    incorrect_count: int
    flat_step_count: int
    up_fraction_predicted: float

    @property
    def evaluated_steps(self) -> int:
        return self.correct_count + self.incorrect_count


def comovement_predict(exogenous: TimeSeries) -> MovementSeries:
    """Predict target direction as the sign of the exogenous step.

    +1 where exo rose, -1 where it fell or stayed flat (ties map to -1,
    matching the convention used for actual movements).
    """
    actual = movements(exogenous)
    return MovementSeries(actual.directions, MovementKind.PREDICTED, flat=actual.flat)


def accuracy(predicted: MovementSeries, actual: MovementSeries) -> AccuracyReport:
    """Score predicted against actual directions, step for step."""
    if predicted.kind is not MovementKind.PREDICTED:
        raise ValueError("first argument must be a predicted movement series")
    if actual.kind is not MovementKind.ACTUAL:
        raise ValueError("second argument must be an actual movement series")
    p = as_direction_vector(predicted, "predicted")
    a = as_direction_vector(actual, "actual")
    if len(p) != len(a):
        raise LengthMismatchError(
            f"predicted has {len(p)} steps but actual has {len(a)}"
        )
    correct = int(np.sum(p == a))
    incorrect = len(a) - correct
    flat = int(actual.flat.sum()) if actual.flat is not None else 0
    return AccuracyReport(
        accuracy=correct / len(a),
        correct_count=correct,
        incorrect_count=incorrect,
        flat_step_count=flat,
        up_fraction_predicted=float(np.mean(p == 1)),
    )
