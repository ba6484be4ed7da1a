"""Core series types: dated value series, movement labels, and sample splits.

A price series is modelled as a dated, strictly ordered vector of float64
observations.  Every downstream quantity is derived from its one-step
increments: the increment magnitudes, the movement directions (+1 up, -1
down-or-flat), and the in/out-of-sample split used for calibration and
evaluation.  All types are immutable after construction and all operations
are pure functions, so values can be shared freely across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSeriesError, SeriesTooShortError, SplitTooSmallError
from .validation import check_equal_length, check_fraction, check_min_length


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TimeSeries:
    """A dated, ordered sequence of real observations (price units).

    Invariants: dates strictly increasing with no duplicates, one value per
    date, and at least two observations so that one increment exists.
    """

    dates: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        dates = _readonly(np.asarray(self.dates, dtype="datetime64[D]"))
        values = _readonly(np.asarray(self.values, dtype=np.float64))
        object.__setattr__(self, "dates", dates)
        object.__setattr__(self, "values", values)
        check_equal_length(dates, values, "dates and values")
        check_min_length(values, 2, "time series")
        if not np.isfinite(values).all():
            raise ValueError("series values must be finite")
        if (np.diff(dates) <= np.timedelta64(0, "D")).any():
            raise ValueError("dates must be strictly increasing")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def first_date(self) -> np.datetime64:
        return self.dates[0]

    @property
    def last_date(self) -> np.datetime64:
        return self.dates[-1]

    @property
    def last_value(self) -> float:
        return float(self.values[-1])


class MovementKind(enum.Enum):
    ACTUAL = "actual"
    PREDICTED = "predicted"


@dataclass(frozen=True)
class MovementSeries:
    """Per-step direction labels, each exactly +1 or -1.

    ``kind`` records whether the labels were derived from observed data or
    produced by a predictor.  For actual movements, ``flat`` marks the steps
    whose increment was exactly zero (labelled -1 by the tie convention); it
    is diagnostic only and never affects scoring denominators.
    """

    directions: np.ndarray
    kind: MovementKind
    flat: np.ndarray | None = field(default=None)

    def __post_init__(self):
        arr = np.asarray(self.directions, dtype=np.int8)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("directions must be a nonempty 1-D vector")
        if not np.isin(arr, (-1, 1)).all():
            raise ValueError("directions must contain only +1 and -1")
        object.__setattr__(self, "directions", _readonly(arr))
        if self.flat is not None:
            flat = np.asarray(self.flat, dtype=bool)
            check_equal_length(flat, arr, "flat mask and directions")
            object.__setattr__(self, "flat", _readonly(flat))

    def __len__(self) -> int:
        return len(self.directions)

    def flipped(self) -> "MovementSeries":
        """Return a copy with every label negated (diagnostic helper)."""
        return MovementSeries(-self.directions, self.kind, self.flat)


@dataclass(frozen=True)
class SplitSeries:
    """Chronological in-sample / out-of-sample partition of one series.

    ``boundary_value`` is the last in-sample observation; it seeds the first
    one-step-ahead forecast of the out-of-sample window.
    """

    in_sample: TimeSeries
    out_sample: TimeSeries
    boundary_value: float

    def __post_init__(self):
        if not self.in_sample.last_date < self.out_sample.first_date:
            raise ValueError("in-sample must end before out-of-sample begins")

    @property
    def n_in(self) -> int:
        return len(self.in_sample)

    @property
    def n_out(self) -> int:
        return len(self.out_sample)


def increments(series: TimeSeries) -> np.ndarray:
    """Per-step differences; element k equals values[k+1] - values[k]."""
    check_min_length(series.values, 2, "series")
    return np.diff(series.values)


def movements(series: TimeSeries) -> MovementSeries:
    """Actual movement labels: +1 where the increment is positive, else -1.

    Zero increments map to -1 (the "down or flat" tie convention) and are
    flagged in the ``flat`` mask.
    """
    eps = increments(series)
    directions = np.where(eps > 0, 1, -1).astype(np.int8)
    return MovementSeries(directions, MovementKind.ACTUAL, flat=(eps == 0))


def mean_abs_increment(series: TimeSeries) -> float:
    """Arithmetic mean of |increments|; strictly positive by contract."""
    eps = increments(series)
    bar = float(np.mean(np.abs(eps)))
    if bar == 0.0:
        raise DegenerateSeriesError(
            "all increments are zero; mean absolute increment must be positive"
        )
    return bar


def split(series: TimeSeries, in_fraction: float) -> SplitSeries:
    """Split chronologically; the first floor(len * in_fraction) observations
    become the in-sample window, the remainder the out-of-sample window."""
    check_fraction(in_fraction, "in_fraction")
    n = len(series)
    m = int(np.floor(n * in_fraction))
    if m < 2 or n - m < 1:
        raise SplitTooSmallError(
            f"split of {n} observations at fraction {in_fraction} leaves "
            f"in-sample {m} / out-of-sample {n - m}; need at least 2 / 1"
        )
    if n - m == 1:
        # A one-observation window cannot form a series (no increment).
        raise SplitTooSmallError(
            f"split of {n} observations at fraction {in_fraction} leaves a "
            "single out-of-sample observation; the out-of-sample window must "
            "contain at least 2"
        )
    in_sample = TimeSeries(series.dates[:m], series.values[:m])
    out_sample = TimeSeries(series.dates[m:], series.values[m:])
    return SplitSeries(in_sample, out_sample, boundary_value=float(series.values[m - 1]))
