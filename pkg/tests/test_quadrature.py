"""Tests for the semi-infinite Gauss-Legendre integrator."""

import math

import numpy as np
import pytest

from gjmsdet import (
    AccuracyError,
    DivergentIntegralError,
    EvaluationError,
    IntegralResult,
    ParameterError,
    QuadratureSpec,
    integrate_semi_infinite,
    truncation_point,
)

# np.trapz on numpy 1.x, renamed on 2.x
_trapezoid = getattr(np, "trapezoid", None) or np.trapz


class TestTruncationPoint:
    def test_unit_envelope(self):
        assert abs(truncation_point(1.0, 1.0, math.exp(-20)) - 20.0) < 1e-12

    def test_shift_by_log_c(self):
        assert abs(truncation_point(math.exp(5), 1.0, math.exp(-20)) - 25.0) < 1e-12

    def test_slow_decay(self):
        # solves e^(-x/2)/(1/2) = 1e-16: X = 2 (log 2 + 16 log 10)
        want = 2.0 * (math.log(2.0) + 16.0 * math.log(10.0))
        got = truncation_point(1.0, 0.5, 1e-16)
        assert abs(got - want) < 1e-9
        # check the envelope bound numerically: int_X^inf e^(-x/2) dx <= tol
        xs = np.linspace(got, got + 200.0, 400_001)
        tail = _trapezoid(np.exp(-0.5 * xs), xs)
        assert tail <= 1e-16 * (1 + 1e-6)

    def test_clamped_to_minimum(self):
        assert truncation_point(1.0, 5.0, 1e-2) == 10.0

    def test_divergent_rate(self):
        with pytest.raises(DivergentIntegralError):
            truncation_point(1.0, 0.0, 1e-10)
        with pytest.raises(DivergentIntegralError):
            truncation_point(1.0, -1.0, 1e-10)

    def test_bad_arguments(self):
        with pytest.raises(ParameterError):
            truncation_point(0.0, 1.0, 1e-10)
        with pytest.raises(ParameterError):
            truncation_point(1.0, 1.0, 0.0)


def _exp_decay(x):
    return -x, 1.0


def _x_exp_sq(x):
    # x e^(-x^2); envelope e^(-x) holds beyond x0 = 1
    return np.log(x) - x * x, 1.0


class TestIntegrate:
    def test_exponential(self):
        res = integrate_semi_infinite(_exp_decay, QuadratureSpec(decay_rate=1.0))
        assert isinstance(res, IntegralResult)
        assert abs(res.value - 1.0) < 1e-12
        assert res.err_estimate >= 0
        assert res.truncation_point >= 10.0
        assert res.panels_used > 0

    def test_gaussian_times_x(self):
        spec = QuadratureSpec(decay_rate=1.0, env_const=1.0, env_start=1.0)
        res = integrate_semi_infinite(_x_exp_sq, spec)
        assert abs(res.value - 0.5) < 1e-12

    def test_lorentzian_damped_vs_trapezoid_oracle(self):
        # brute-force oracle: 10^6-point trapezoid of e^(-x)/(x^2+pi^2) on [0, 60]
        xs = np.linspace(0.0, 60.0, 1_000_001)
        oracle = float(_trapezoid(np.exp(-xs) / (xs * xs + np.pi ** 2), xs))
        f = lambda x: (-x - np.log(x * x + np.pi ** 2), 1.0)
        res = integrate_semi_infinite(f, QuadratureSpec(decay_rate=1.0))
        assert abs(res.value - oracle) < 1e-10
        # frozen 40-digit reference for the same integral (tests/_oracles.py)
        assert abs(res.value - 0.089489872236083635) < 1e-13

    def test_linearity(self):
        spec = QuadratureSpec(decay_rate=1.0, env_const=4.0)
        f = lambda x: (-x, 1.0)                                   # integral 1
        g = lambda x: (-np.log(np.cosh(x)), 1.0)                  # sech, integral pi/2
        i_f = integrate_semi_infinite(f, spec)
        i_g = integrate_semi_infinite(g, spec)
        rng = np.random.default_rng(7)
        for a, b in rng.uniform(0.1, 3.0, size=(5, 2)):
            h = lambda x: (
                np.logaddexp(np.log(a) - x, np.log(b) - np.log(np.cosh(x))),
                1.0,
            )
            i_h = integrate_semi_infinite(h, spec)
            combined = a * i_f.value + b * i_g.value
            budget = a * i_f.err_estimate + b * i_g.err_estimate + i_h.err_estimate
            assert abs(i_h.value - combined) <= budget + 1e-13

    def test_error_honesty_suite(self):
        # ten analytically integrable decaying integrands; the true error must
        # stay below ten times the reported estimate for every one of them
        cases = [
            (lambda x: (-x, 1.0), 1.0, 1.0, 1.0),
            (lambda x: (-2.0 * x, 1.0), 0.5, 2.0, 1.0),
            (lambda x: (np.log(x) - x, 1.0), 1.0, 0.9, 4.0),
            (lambda x: (2.0 * np.log(x) - x, 1.0), 2.0, 0.9, 55.0),
            (lambda x: (np.log(x) - x * x, 1.0), 0.5, 1.0, 1.0),
            (lambda x: (np.log(np.abs(np.cos(x))) - x, np.sign(np.cos(x))), 0.5, 1.0, 1.0),
            (lambda x: (np.log(np.abs(np.sin(x))) - x, np.sign(np.sin(x))), 0.5, 1.0, 1.0),
            (lambda x: (-0.5 * x, 1.0), 2.0, 0.5, 1.0),
            (lambda x: (-np.log(np.cosh(x)), 1.0), math.pi / 2.0, 1.0, 2.0),
            (lambda x: (3.0 * np.log(x) - 2.0 * x, 1.0), 6.0 / 16.0, 1.8, 170.0),
        ]
        for f, exact, rate, env in cases:
            spec = QuadratureSpec(decay_rate=rate, env_const=env)
            res = integrate_semi_infinite(f, spec)
            assert abs(res.value - exact) <= 10.0 * res.err_estimate
            assert abs(res.value - exact) < 1e-11 * max(1.0, abs(exact))

    def test_deterministic(self):
        spec = QuadratureSpec(decay_rate=1.0)
        f = lambda x: (np.log(x) - x, 1.0)
        r1 = integrate_semi_infinite(f, spec)
        r2 = integrate_semi_infinite(f, spec)
        assert r1.value == r2.value
        assert r1.err_estimate == r2.err_estimate
        assert r1.panels_used == r2.panels_used

    def test_panel_budget_exhaustion(self):
        # a width-0.05 spike at x = 2 demands refinement the budget cannot pay
        f = lambda x: (-400.0 * (x - 2.0) ** 2, 1.0)
        spec = QuadratureSpec(
            decay_rate=1.0, env_const=math.exp(2.001), max_panels=16
        )
        with pytest.raises(AccuracyError) as exc_info:
            integrate_semi_infinite(f, spec)
        err = exc_info.value
        assert math.isfinite(err.value)
        assert err.err_estimate > 0
        assert err.panels_used <= 16

    def test_narrow_spike_converges_with_budget(self):
        f = lambda x: (-400.0 * (x - 2.0) ** 2, 1.0)
        spec = QuadratureSpec(decay_rate=1.0, env_const=math.exp(2.001))
        res = integrate_semi_infinite(f, spec)
        exact = math.sqrt(math.pi / 400.0)  # the x < 0 tail is ~e^(-1600)
        assert abs(res.value - exact) <= 1e-12

    def test_non_finite_sample_reports_abscissa(self):
        def f(x):
            out = np.where(x > 5.0, np.nan, -x)
            return out, 1.0

        with pytest.raises(EvaluationError) as exc_info:
            integrate_semi_infinite(f, QuadratureSpec(decay_rate=1.0))
        assert exc_info.value.abscissa > 5.0

    def test_zero_integrand(self):
        f = lambda x: (np.full_like(x, -np.inf), 1.0)
        res = integrate_semi_infinite(f, QuadratureSpec(decay_rate=1.0))
        assert res.value == 0.0


class TestSpecValidation:
    def test_rejects_bad_fields(self):
        with pytest.raises(DivergentIntegralError):
            QuadratureSpec(decay_rate=0.0)
        with pytest.raises(ParameterError):
            QuadratureSpec(decay_rate=1.0, rel_tol=0.0)
        with pytest.raises(ParameterError):
            QuadratureSpec(decay_rate=1.0, abs_tol=-1.0)
        with pytest.raises(ParameterError):
            QuadratureSpec(decay_rate=1.0, env_const=0.0)
        with pytest.raises(ParameterError):
            QuadratureSpec(decay_rate=1.0, env_start=-1.0)
        with pytest.raises(ParameterError):
            QuadratureSpec(decay_rate=1.0, max_panels=2)

    def test_defaults(self):
        spec = QuadratureSpec(decay_rate=2.0)
        assert spec.rel_tol == 1e-11
        assert spec.abs_tol == 1e-15
        assert spec.max_panels == 4096
