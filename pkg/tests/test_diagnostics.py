"""Tests for the gain formulas and the retrospective condition."""

import numpy as np
import pytest

from mpanf.diagnostics import (
    RetroDiagnostics,
    alpha_star,
    delta_mse_in_approx,
    delta_mse_out_approx,
    retrospective,
)
from mpanf.forecasters import MpanfForecaster
from mpanf.series import TimeSeries


def make_series(values, start="2021-01-01"):
    values = np.asarray(values, dtype=float)
    dates = np.datetime64(start, "D") + np.arange(len(values))
    return TimeSeries(dates, values)


class TestAlphaStar:
    def test_key_points(self):
        assert alpha_star(0.5) == 0.0
        assert alpha_star(1.0) == 1.0
        assert alpha_star(0.0) == -1.0
        assert alpha_star(0.75) == pytest.approx(0.5)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            alpha_star(1.2)
        with pytest.raises(ValueError):
            alpha_star(-0.1)


class TestDeltaMseIn:
    def test_zero_alpha_gives_zero(self):
        assert delta_mse_in_approx(0.0, 0.73, 1.4) == 0.0

    def test_substitution_identity(self):
        # Plugging the optimal coefficient in gives (2*acc - 1)^2 * eps^2.
        for acc in np.linspace(0.0, 1.0, 101):
            for eps in (0.1, 1.0, 10.0):
                a = 2.0 * acc - 1.0
                got = delta_mse_in_approx(a, acc, eps)
                assert got == pytest.approx(a * a * eps * eps, rel=1e-12, abs=1e-15)

    def test_numeric_spot_check(self):
        got = delta_mse_in_approx(0.1072, 0.5536, 0.3842)
        assert got == pytest.approx(0.1072**2 * 0.3842**2, rel=1e-12)

    def test_concavity_in_alpha(self):
        rng = np.random.default_rng(101)
        for _ in range(50):
            acc = rng.uniform(0.0, 1.0)
            eps = rng.uniform(0.1, 5.0)
            a = rng.uniform(-1.0, 2.0)
            h = 0.05
            second_diff = (
                delta_mse_in_approx(a + h, acc, eps)
                - 2 * delta_mse_in_approx(a, acc, eps)
                + delta_mse_in_approx(a - h, acc, eps)
            )
            assert second_diff < 0

    def test_argmax_matches_closed_form(self):
        alphas = np.arange(-1.0, 2.0 + 1e-9, 1e-4)
        for acc in (0.55, 0.7, 0.95):
            values = (4 * alphas * acc - alphas**2 - 2 * alphas) * 1.0
            assert alphas[np.argmax(values)] == pytest.approx(2 * acc - 1, abs=1e-4)

    def test_nonpositive_eps_rejected(self):
        with pytest.raises(ValueError):
            delta_mse_in_approx(0.1, 0.6, 0.0)


class TestDeltaMseOut:
    def test_direct_substitution(self):
        assert delta_mse_out_approx(0.1, 1.0, 0.2, 1.0) == pytest.approx(0.03)

    def test_sign_matches_condition(self):
        # Nonnegative gain iff lhs >= rhs, whenever the deployed
        # adjustment is positive: pure algebra, zero tolerance.
        rng = np.random.default_rng(103)
        for _ in range(1000):
            a_in = rng.uniform(0.001, 1.0)
            e_in = rng.uniform(0.001, 10.0)
            a_out = rng.uniform(-1.0, 1.0)
            e_out = rng.uniform(0.001, 10.0)
            gain = delta_mse_out_approx(a_in, e_in, a_out, e_out)
            condition = a_out * e_out >= 0.5 * a_in * e_in
            assert (gain >= 0) == condition


class TestRetrospective:
    def fit_model(self, seed=7, n=300):
        rng = np.random.default_rng(seed)
        y = 50 + np.cumsum(rng.normal(size=n))
        d = np.where(np.diff(y) > 0, 1, -1).astype(np.int8)
        keep = rng.random(n - 1) < 0.8
        d = np.where(keep, d, -d).astype(np.int8)
        return MpanfForecaster().fit(y, d), y

    def test_fields_are_consistent(self):
        model, y_in = self.fit_model()
        rng = np.random.default_rng(11)
        out = make_series(y_in[-1] + np.cumsum(rng.normal(size=100)))
        d_out = rng.choice([-1, 1], size=100)
        diag = retrospective(model, out, d_out)
        assert isinstance(diag, RetroDiagnostics)
        assert diag.alpha_in_star == model.alpha_
        assert diag.eps_bar_in == model.eps_bar_
        assert diag.lhs == pytest.approx(diag.alpha_out_star * diag.eps_bar_out)
        assert diag.rhs == pytest.approx(0.5 * diag.alpha_in_star * diag.eps_bar_in)
        assert diag.condition_holds == (diag.lhs >= diag.rhs)
        assert diag.delta_mse_out_approx == pytest.approx(
            delta_mse_out_approx(
                diag.alpha_in_star,
                diag.eps_bar_in,
                diag.alpha_out_star,
                diag.eps_bar_out,
            )
        )

    def test_boundary_step_enters_accuracy(self):
        model, _ = self.fit_model()
        out = make_series([10.0, 11.0])  # movements within the window: +1
        # Predictions: first step crosses the boundary into 10.0.
        up = retrospective(model, out, [1, 1], boundary=9.0)
        down = retrospective(model, out, [-1, 1], boundary=9.0)
        # 9 -> 10 is an up step, so flipping the first prediction changes
        # out-of-sample accuracy, hence alpha_out.
        assert up.alpha_out_star > down.alpha_out_star
        assert up.alpha_out_star == pytest.approx(1.0)
        assert down.alpha_out_star == pytest.approx(0.0)

    def test_flat_boundary_step_scores_down(self):
        model, _ = self.fit_model()
        out = make_series([9.0, 11.0])
        diag = retrospective(model, out, [-1, 1], boundary=9.0)
        # 9 -> 9 is flat, scored as a down step.
        assert diag.alpha_out_star == pytest.approx(1.0)

    def test_eps_bar_out_excludes_boundary_step(self):
        model, _ = self.fit_model()
        out = make_series([10.0, 11.0, 13.0])
        diag = retrospective(model, out, [1, 1, 1], boundary=0.0)
        # Increments within the window are 1 and 2; the 0 -> 10 jump is not one.
        assert diag.eps_bar_out == pytest.approx(1.5)

    def test_coin_flip_out_of_sample_fails_condition(self):
        model, y_in = self.fit_model()  # alpha_in > 0 with high probability
        assert model.alpha_ > 0
        rng = np.random.default_rng(13)
        steps = rng.choice([-1.0, 1.0], size=200) * rng.uniform(0.5, 1.5, size=200)
        out = make_series(y_in[-1] + np.cumsum(steps))
        d_out = np.where(steps > 0, 1, -1)
        # Make out-of-sample accuracy exactly 0.5 by flipping half the labels.
        d_out[::2] *= -1
        diag = retrospective(model, out, d_out, boundary=y_in[-1])
        assert abs(diag.alpha_out_star) <= 0.02
        assert not diag.condition_holds

    def test_length_mismatch_rejected(self):
        model, _ = self.fit_model()
        out = make_series([10.0, 11.0, 12.0])
        with pytest.raises(ValueError):
            retrospective(model, out, [1, 1])
