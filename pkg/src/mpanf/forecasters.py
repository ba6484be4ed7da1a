"""Rolling one-step-ahead forecasters sharing one estimator contract.

Five methods: the movement-adjusted naive forecast and four baselines
(naive, naive with drift, IMA(1,1), and a direction-augmented linear
regression).  All follow the same protocol: calibrate once on the in-sample
window via ``fit``, then produce one-step-ahead forecasts over the
out-of-sample window via ``predict``, where the forecast for step k may use
actual observations only up through step k-1 (step 0 starts from the last
in-sample value).  Internal state — the IMA residual, the re-estimated
drift — is advanced with observed actuals, never with the model's own
forecasts.

Estimators are sklearn-compatible (``get_params`` / ``set_params`` / clone);
fitted attributes carry a trailing underscore.  ``predict`` never mutates
fitted state, so one fitted estimator may serve several windows.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from scipy.signal import lfilter
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .errors import (
    DegenerateSeriesError,
    MissingPredictionsError,
    NonConvergentError,
    SingularDesignError,
)
from .movement import accuracy as movement_accuracy
from .series import MovementKind, MovementSeries
from .validation import (
    as_direction_vector,
    as_float_vector,
    check_equal_length,
    check_min_length,
)


@dataclass(frozen=True)
class ForecastSeries:
    """One method's rolling forecasts, aligned one-to-one with the
    out-of-sample observations."""

    method: str
    predictions: np.ndarray

    def __post_init__(self):
        arr = np.array(self.predictions, dtype=np.float64, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "predictions", arr)

    @property
    def values(self) -> np.ndarray:
        return self.predictions

    def __len__(self) -> int:
        return len(self.predictions)


class BaseForecaster(BaseEstimator):
    """Shared fit/predict plumbing for the rolling one-step protocol."""

    method_name: str = ""
    requires_directions: bool = False
    _min_fit_length: int = 2

    # -- subclass hooks ----------------------------------------------------
    def _fit(self, y: np.ndarray, d: np.ndarray | None) -> None:
        raise NotImplementedError

    def _initial_state(self):
        return None

    def _forecast_one(self, state, last: float, direction: int | None) -> float:
        raise NotImplementedError

    def _advance(self, state, observed: float, forecast: float):
        return state

    # -- public API --------------------------------------------------------
    def fit(self, y, directions=None):
        """Calibrate on the in-sample window.

        ``y`` is the in-sample series (TimeSeries or 1-D array);
        ``directions`` the predicted movements for in-sample steps 1..M-1,
        required only by direction-dependent methods.
        """
        values = as_float_vector(y, "in-sample values")
        check_min_length(values, self._min_fit_length, "in-sample window")
        d = None
        if self.requires_directions:
            if directions is None:
                raise MissingPredictionsError(
                    f"{self.method_name} requires movement predictions to fit"
                )
            d = as_direction_vector(directions, "in-sample predictions")
            check_equal_length(d, values[1:], "predictions and in-sample steps")
        self._fit(values, d)
        self.boundary_ = float(values[-1])
        self.n_fit_ = len(values)
        return self

    def predict(self, y_out, directions=None, boundary: float | None = None):
        """Rolling one-step-ahead forecasts over observed out-of-sample values.

        Forecast k is computed before observing ``y_out[k]``: step 0 starts
        from ``boundary`` (default: the last in-sample value recorded at
        fit), later steps from the previous observed actual.  Returns an
        array of the same length as ``y_out``.
        """
        check_is_fitted(self)
        actuals = as_float_vector(y_out, "out-of-sample values")
        check_min_length(actuals, 1, "out-of-sample window")
        d = None
        if self.requires_directions:
            if directions is None:
                raise MissingPredictionsError(
                    f"{self.method_name} requires movement predictions to predict"
                )
            d = as_direction_vector(directions, "out-of-sample predictions")
            check_equal_length(d, actuals, "predictions and out-of-sample steps")
        last = self.boundary_ if boundary is None else float(boundary)
        state = self._initial_state()
        out = np.empty(len(actuals), dtype=np.float64)
        for k in range(len(actuals)):
            step_dir = int(d[k]) if d is not None else None
            out[k] = self._forecast_one(state, last, step_dir)
            state = self._advance(state, actuals[k], out[k])
            last = actuals[k]
        return out


class NaiveForecaster(BaseForecaster):
    """Forecasts tomorrow's value as today's (random-walk baseline)."""

    method_name = "naive"
    _min_fit_length = 1

    def _fit(self, y, d):
        pass

    def _forecast_one(self, state, last, direction):
        return last


class DriftForecaster(BaseForecaster):
    """Naive forecast plus a constant per-step drift.

    The drift is the mean in-sample increment, (y_M - y_1)/(M - 1).  With
    ``reestimate=True`` the drift is recomputed from the full history after
    each observed out-of-sample value; the default holds it fixed, matching
    the fixed-coefficient treatment of the other methods.
    """

    method_name = "drift"
    _min_fit_length = 3

    def __init__(self, reestimate: bool = False):
        self.reestimate = reestimate

    def _fit(self, y, d):
        self.first_value_ = float(y[0])
        self.drift_ = float((y[-1] - y[0]) / (len(y) - 1))

    def _initial_state(self):
        # (current drift, observation count backing it)
        return (self.drift_, self.n_fit_)

    def _forecast_one(self, state, last, direction):
        return last + state[0]

    def _advance(self, state, observed, forecast):
        if not self.reestimate:
            return state
        count = state[1] + 1
        return ((observed - self.first_value_) / (count - 1), count)


def _css_residuals(diffs: np.ndarray, theta: float) -> np.ndarray:
    """Conditional one-step residuals e_t = w_t - theta * e_{t-1}, e_0 = 0."""
    return lfilter([1.0], [1.0, theta], diffs)


def _golden_section(f, lo: float, hi: float, tol: float) -> float:
    """Minimize a unimodal scalar function on [lo, hi] to width ``tol``."""
    inv_phi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return (a + b) / 2.0


class Ima11Forecaster(BaseForecaster):
    """Integrated moving-average model of order (1,1).

    The differenced series is modelled as an invertible MA(1); theta is
    estimated by conditional sum of squares (zero initial residual), located
    with a golden-section search over ``bounds`` and refined to ``tol``.
    The one-step forecast is y_t + theta * e_t, with the residual e updated
    from each observed actual during the rolling pass.
    """

    method_name = "ima11"
    _min_fit_length = 3

    def __init__(self, bounds: tuple[float, float] = (-0.99, 0.99), tol: float = 1e-6):
        self.bounds = bounds
        self.tol = tol

    def _fit(self, y, d):
        diffs = np.diff(y)

        def sse(theta: float) -> float:
            e = _css_residuals(diffs, theta)
            return float(e @ e)

        lo, hi = self.bounds
        theta = _golden_section(sse, lo, hi, self.tol)
        if not (np.isfinite(theta) and abs(theta) < 1.0 and np.isfinite(sse(theta))):
            raise NonConvergentError(
                f"IMA(1,1) estimation produced invalid theta {theta!r}"
            )
        self.theta_ = float(theta)
        self.resid_ = float(_css_residuals(diffs, theta)[-1])

    def _initial_state(self):
        return self.resid_

    def _forecast_one(self, state, last, direction):
        return last + self.theta_ * state

    def _advance(self, state, observed, forecast):
        return observed - forecast


class LinRegForecaster(BaseForecaster):
    """Least-squares forecast from the previous value and the predicted
    movement.

    Fits y_t = b0 + b1 * y_{t-1} + b2 * d_t over the in-sample steps by
    ordinary least squares (normal equations, Cholesky factorization) and
    holds the coefficients fixed during the rolling pass.
    """

    method_name = "linreg"
    requires_directions = True
    _min_fit_length = 3

    def __init__(self, fit_intercept: bool = True):
        self.fit_intercept = fit_intercept

    def _fit(self, y, d):
        rows = [y[:-1], d.astype(np.float64)]
        if self.fit_intercept:
            rows.insert(0, np.ones(len(y) - 1))
        design = np.column_stack(rows)
        gram = design.T @ design
        moment = design.T @ y[1:]
        try:
            beta = cho_solve(cho_factor(gram), moment)
        except LinAlgError as err:
            raise SingularDesignError(
                f"normal equations are rank-deficient: {err}"
            ) from None
        if self.fit_intercept:
            self.intercept_ = float(beta[0])
            self.coef_ = beta[1:].copy()
        else:
            self.intercept_ = 0.0
            self.coef_ = beta.copy()

    def _forecast_one(self, state, last, direction):
        return self.intercept_ + self.coef_[0] * last + self.coef_[1] * direction


class MpanfForecaster(BaseForecaster):
    """Movement-prediction-adjusted naive forecast.

    The naive forecast is shifted by a fixed fraction of the mean in-sample
    absolute increment, in the predicted direction:

        forecast = last + direction * alpha * eps_bar_in

    By default alpha is the analytically optimal in-sample coefficient
    2 * ACC_in - 1, where ACC_in is the in-sample movement-prediction
    accuracy; pass ``alpha`` to pin the coefficient instead.  Accuracy below
    0.5 yields a negative coefficient (the forecast fades the predicted
    direction); this is deliberate and triggers a warning rather than a
    clamp.
    """

    method_name = "mpanf"
    requires_directions = True
    _min_fit_length = 2

    def __init__(self, alpha: float | None = None):
        self.alpha = alpha

    def _fit(self, y, d):
        eps = np.diff(y)
        eps_bar = float(np.mean(np.abs(eps)))
        if eps_bar == 0.0:
            raise DegenerateSeriesError(
                "all in-sample increments are zero; cannot calibrate the "
                "adjustment magnitude"
            )
        self.eps_bar_ = eps_bar
        predicted = MovementSeries(d, MovementKind.PREDICTED)
        actual = MovementSeries(
            np.where(eps > 0, 1, -1).astype(np.int8),
            MovementKind.ACTUAL,
            flat=(eps == 0),
        )
        report = movement_accuracy(predicted, actual)
        self.accuracy_ = report.accuracy
        self.accuracy_report_ = report
        if self.alpha is not None:
            self.alpha_ = float(self.alpha)
        else:
            self.alpha_ = 2.0 * report.accuracy - 1.0
            if report.accuracy < 0.5:
                warnings.warn(
                    f"in-sample movement accuracy {report.accuracy:.4f} is below "
                    "0.5; the adjustment coefficient is negative and the "
                    "forecast will fade the predicted direction",
                    UserWarning,
                    stacklevel=3,
                )

    def _forecast_one(self, state, last, direction):
        return last + direction * self.alpha_ * self.eps_bar_


METHODS: dict[str, type[BaseForecaster]] = {
    cls.method_name: cls
    for cls in (
        NaiveForecaster,
        DriftForecaster,
        Ima11Forecaster,
        LinRegForecaster,
        MpanfForecaster,
    )
}


def rolling_forecast(
    forecaster: BaseForecaster,
    out_sample,
    directions=None,
    boundary: float | None = None,
) -> ForecastSeries:
    """Run a fitted forecaster over an out-of-sample window.

    Thin wrapper over ``predict`` that tags the output with the method name.
    """
    predictions = forecaster.predict(out_sample, directions=directions, boundary=boundary)
    return ForecastSeries(method=forecaster.method_name, predictions=predictions)
