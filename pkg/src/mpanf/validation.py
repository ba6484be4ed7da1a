"""Input validation helpers used by the estimators and metric functions."""

from __future__ import annotations

import numpy as np

from .errors import LengthMismatchError, SeriesTooShortError


def as_float_vector(x, name: str = "array") -> np.ndarray:
    """Coerce array-like (or a TimeSeries) to a 1-D float64 array."""
    values = getattr(x, "values", x)
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_direction_vector(x, name: str = "directions") -> np.ndarray:
    """Coerce array-like (or a MovementSeries) to a vector of +1/-1 labels."""
    values = getattr(x, "directions", x)
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    arr = arr.astype(np.int8, copy=True)
    if arr.size and not np.isin(arr, (-1, 1)).all():
        raise ValueError(f"{name} must contain only +1 and -1 labels")
    return arr


def check_min_length(arr, n: int, name: str = "series") -> None:
    if len(arr) < n:
        raise SeriesTooShortError(
            f"{name} has {len(arr)} observations; at least {n} required"
        )


def check_equal_length(a, b, what: str = "sequences") -> None:
    if len(a) != len(b):
        raise LengthMismatchError(f"{what} differ in length: {len(a)} vs {len(b)}")


def check_fraction(x: float, name: str = "fraction") -> float:
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie strictly between 0 and 1, got {x}")
    return x
