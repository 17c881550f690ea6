"""Adaptive composite Gauss-Legendre integration on [0, inf).

Intended for smooth integrands decaying exponentially: |f(x)| <= C e^(-L x)
for x beyond some x0.  The semi-infinite range is truncated at a point X
where the analytic envelope bound on the discarded tail,

    int_X^inf C e^(-L x) dx = C e^(-L X) / L,

drops below tolerance; that bound is folded into the reported error
estimate rather than silently ignored.

Integrands are supplied in log-magnitude-plus-sign form: the evaluator
receives an ndarray of abscissas and returns ``(log|f|, sign)``.  This keeps
factors like cosh^(d+1)(x/2) representable where the plain product would
overflow binary64 long before the integrand itself stops being tiny.

The scheme is a fixed 32-node Gauss rule per panel with bisection
refinement: a panel is accepted when its one-panel value and the sum over
its two halves agree within the panel's share of the error budget, and the
two-level difference is charged to the estimate.  There are no randomized
abscissas; identical inputs give bit-identical results.  Everything here is
stateless and safe to call concurrently as long as the integrand itself is
pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from .errors import AccuracyError, DivergentIntegralError, EvaluationError, ParameterError

__all__ = [
    "QuadratureSpec",
    "IntegralResult",
    "LogIntegrand",
    "truncation_point",
    "integrate_semi_infinite",
]

LogIntegrand = Callable[[np.ndarray], Tuple[np.ndarray, Union[np.ndarray, float]]]

_GAUSS_ORDER = 32
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_GAUSS_ORDER)
_EPS = float(np.finfo(float).eps)
_MIN_TRUNCATION = 10.0
_TAIL_TOL_FLOOR = 1e-300


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances, budget and decay envelope for one semi-infinite integral.

    ``decay_rate`` is the exponent L of the envelope |f(x)| <= env_const *
    e^(-L x), valid for x >= env_start.  ``rel_tol`` is the target relative
    error, ``abs_tol`` an absolute floor used both for near-zero integrals
    and for choosing the truncation point, ``max_panels`` the total number
    of 32-node panel evaluations allowed.
    """

    decay_rate: float
    rel_tol: float = 1e-11
    abs_tol: float = 1e-15
    max_panels: int = 4096
    env_const: float = 1.0
    env_start: float = 0.0

    def __post_init__(self) -> None:
        if self.decay_rate <= 0:
            raise DivergentIntegralError("decay_rate must be positive")
        if self.rel_tol <= 0:
            raise ParameterError("rel_tol must be positive")
        if self.abs_tol < 0:
            raise ParameterError("abs_tol must be non-negative")
        if self.max_panels < 4:
            raise ParameterError("max_panels must allow at least a few panels")
        if self.env_const <= 0:
            raise ParameterError("env_const must be positive")
        if self.env_start < 0:
            raise ParameterError("env_start must be non-negative")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    err_estimate: float
    panels_used: int
    truncation_point: float

    def __post_init__(self) -> None:
        if self.err_estimate < 0 or self.truncation_point <= 0:
            raise ParameterError("malformed integral result")


def truncation_point(c_bound: float, decay_rate: float, tol: float) -> float:
    """Smallest X with c_bound * e^(-decay_rate * X) / decay_rate <= tol,
    clamped below at 10.

    The left side bounds the discarded tail of any integrand satisfying the
    envelope, so integrating on [0, X] loses at most ``tol``.
    """
    if decay_rate <= 0:
        raise DivergentIntegralError("decay_rate must be positive")
    if c_bound <= 0 or tol <= 0:
        raise ParameterError("c_bound and tol must be positive")
    x = (math.log(c_bound) - math.log(decay_rate) - math.log(tol)) / decay_rate
    return max(x, _MIN_TRUNCATION)


def _eval_panels(f: LogIntegrand, lo: np.ndarray, hi: np.ndarray):
    """Gauss values of f over each [lo_i, hi_i]; also the absolute mass
    sum_i |w f| h used for the round-off floor."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center[:, None] + half[:, None] * _NODES
    logmag, sign = f(x.reshape(-1))
    logmag = np.asarray(logmag, dtype=float).reshape(x.shape)
    bad_mask = np.isnan(logmag) | (logmag == np.inf)
    if bad_mask.any():
        bad = x[bad_mask]
        raise EvaluationError(
            "integrand log-magnitude is not finite", float(bad.reshape(-1)[0])
        )
    sign = np.asarray(sign, dtype=float)
    if sign.ndim:
        sign = sign.reshape(x.shape)
    fx = sign * np.exp(logmag)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)]
        raise EvaluationError("integrand value overflowed", float(bad.reshape(-1)[0]))
    weighted = fx * _WEIGHTS
    vals = weighted.sum(axis=1) * half
    mass = np.abs(weighted).sum(axis=1) * half
    return vals, mass


def _initial_breaks(x_max: float) -> np.ndarray:
    breaks = [0.0, 1.0]
    while breaks[-1] * 2.0 < x_max:
        breaks.append(breaks[-1] * 2.0)
    if breaks[-1] < x_max:
        breaks.append(x_max)
    return np.asarray(breaks)


def integrate_semi_infinite(f: LogIntegrand, spec: QuadratureSpec) -> IntegralResult:
    """Approximate int_0^inf f(x) dx for a log-magnitude-plus-sign integrand.

    Returns an IntegralResult whose ``err_estimate`` adds three honest
    contributions: the accepted two-level panel differences, the analytic
    tail bound at the truncation point, and a round-off floor proportional
    to the absolute Gauss mass.

    Raises AccuracyError (carrying the best value and estimate) when
    ``spec.max_panels`` runs out first, and EvaluationError on a non-finite
    integrand sample.
    """
    tail_tol = max(spec.abs_tol, _TAIL_TOL_FLOOR)
    x_max = truncation_point(spec.env_const, spec.decay_rate, tail_tol)
    x_max = max(x_max, spec.env_start)
    tail_bound = spec.env_const * math.exp(-spec.decay_rate * x_max) / spec.decay_rate

    breaks = _initial_breaks(x_max)
    lo, hi = breaks[:-1], breaks[1:]
    vals, _ = _eval_panels(f, lo, hi)
    panels_evaluated = lo.size

    rough = float(vals.sum())
    scale = max(abs(rough), float(np.abs(vals).max()))
    target = max(spec.abs_tol, spec.rel_tol * scale)
    budgets = np.full(lo.size, target / lo.size)

    min_width = 1e-12 * max(1.0, x_max)
    accepted: list[np.ndarray] = []
    accepted_err = 0.0
    accepted_mass = 0.0
    leaves = 0

    while lo.size:
        needed = 2 * lo.size
        if panels_evaluated + needed > spec.max_panels:
            best = math.fsum(
                [float(a.sum()) for a in accepted] + [float(vals.sum())]
            )
            estimate = accepted_err + float(np.abs(vals).sum()) + tail_bound
            raise AccuracyError(
                "panel budget exhausted before tolerance was met",
                value=best,
                err_estimate=estimate,
                panels_used=panels_evaluated,
            )
        mid = 0.5 * (lo + hi)
        child_lo = np.empty(needed)
        child_lo[0::2], child_lo[1::2] = lo, mid
        child_hi = np.empty(needed)
        child_hi[0::2], child_hi[1::2] = mid, hi
        child_vals, child_mass = _eval_panels(f, child_lo, child_hi)
        panels_evaluated += needed

        pair = child_vals[0::2] + child_vals[1::2]
        delta = np.abs(vals - pair)
        accept = (delta <= budgets) | ((hi - lo) <= min_width)

        if accept.any():
            taken = np.repeat(accept, 2)
            accepted.append(child_vals[taken])
            accepted_err += float(delta[accept].sum())
            accepted_mass += float(child_mass[taken].sum())
            leaves += int(taken.sum())

        rejected = ~accept
        if rejected.any():
            taken = np.repeat(rejected, 2)
            lo, hi, vals = child_lo[taken], child_hi[taken], child_vals[taken]
            budgets = np.repeat(budgets[rejected] * 0.5, 2)
        else:
            break

    value = math.fsum(np.concatenate(accepted).tolist()) if accepted else 0.0
    err = accepted_err + tail_bound + 8.0 * _EPS * accepted_mass
    return IntegralResult(
        value=value,
        err_estimate=err,
        panels_used=leaves,
        truncation_point=x_max,
    )
