"""Exact integer machinery for Chebyshev polynomials of the second kind at
odd order, U_{2k-1}, and the determinant product-rule powers they induce.

U_{2k-1} is an odd polynomial,

    U_{2k-1}(x) = x * (u_0 + u_1 x^2 + ... + u_{k-1} x^{2k-2}),

whose integer coefficients u_j alternate in sign, end in the leading value
u_{k-1} = 2^(2k-1), and sum to U_{2k-1}(1) = 2k.  On the hyperbolic range
the polynomial carries the identity

    sinh(k x) / sinh(x/2) = U_{2k-1}(cosh(x/2)),

which is what lets a 2k-order determinant integrand be regrouped into
second-order pieces.  Dividing signs and powers of two out of the u_j,

    v_j(k) = (-1)^(k-1) * (-1)^j * u_j(k) / 2^(2j+1),

gives positive integers: the exponents of the determinant product rule

    det P_2k(d) = prod_{j<k} det P_2(d - 2j) ^ v_j(k).

All coefficients are produced by the three-term recurrence
U_{n+1}(x) = 2x U_n(x) - U_{n-1}(x) in exact integer arithmetic, so there
is no order cap and no overflow.  All functions are pure and the returned
values immutable, safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalConsistencyError, ParameterError

__all__ = [
    "OddChebyshev",
    "ProductRule",
    "u_coefficients",
    "eval_u",
    "v_coefficients",
]


@dataclass(frozen=True)
class OddChebyshev:
    """Exact coefficients of U_{2k-1} in odd-polynomial form.

    ``u[j]`` is the integer coefficient of x^(2j+1); ``len(u) == k``.
    """

    k: int
    u: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError("k must be a positive integer")
        if len(self.u) != self.k:
            raise InternalConsistencyError(
                f"expected {self.k} odd coefficients, got {len(self.u)}"
            )
        if self.u[-1] != 1 << (2 * self.k - 1):
            raise InternalConsistencyError(
                f"leading coefficient {self.u[-1]} != 2^{2 * self.k - 1}"
            )
        for j, c in enumerate(self.u):
            if (c > 0) != ((self.k - 1 - j) % 2 == 0):
                raise InternalConsistencyError(
                    f"u[{j}] = {c} breaks the (-1)^(k-1-j) sign pattern"
                )


@dataclass(frozen=True)
class ProductRule:
    """Positive integer exponents v_j(k) of the determinant product rule."""

    k: int
    v: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError("k must be a positive integer")
        if len(self.v) != self.k:
            raise InternalConsistencyError(
                f"expected {self.k} powers, got {len(self.v)}"
            )
        if any(p <= 0 for p in self.v):
            raise InternalConsistencyError(f"non-positive power in {self.v}")
        if self.v[0] != self.k or self.v[-1] != 1:
            raise InternalConsistencyError(
                f"powers {self.v} break v[0] = k, v[k-1] = 1"
            )


def _check_order(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ParameterError("k must be a positive integer")
    return k


@lru_cache(maxsize=None)
def u_coefficients(k: int) -> OddChebyshev:
    """Exact odd-power coefficients of U_{2k-1}.

    Runs the recurrence U_{n+1} = 2x U_n - U_{n-1} from U_0 = 1, U_1 = 2x
    up to n = 2k-1 on dense integer coefficient lists and keeps the odd rows.
    """
    _check_order(k)
    prev = [1]      # U_0
    cur = [0, 2]    # U_1
    for _ in range(2 * k - 2):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    if any(cur[i] != 0 for i in range(0, len(cur), 2)):
        raise InternalConsistencyError("U_{2k-1} produced even-power terms")
    return OddChebyshev(k=k, u=tuple(cur[1::2]))


def eval_u(k: int, y: float) -> float:
    """Value of U_{2k-1}(y) by Horner evaluation of the odd polynomial.

    The Horner pass runs in exact rational arithmetic (the coefficients are
    integers and a binary64 ``y`` is an exact rational), with one correctly
    rounded conversion at the end.  Float-only Horner would lose up to seven
    digits near y = 1, where coefficients of size ~2^(2k-1) cancel down to
    U_{2k-1}(1) = 2k; staying exact keeps every result at the 1-ulp level.

    For |y| >= 1 the result also equals sinh(2k*arccosh|y|)/sinh(arccosh|y|)
    up to the odd symmetry in y; that hyperbolic ratio is used as an
    independent cross-check in the test suite, never as the value here.
    """
    _check_order(k)
    y = float(y)
    if not math.isfinite(y):
        raise ParameterError("y must be finite")
    coeffs = u_coefficients(k).u
    yy = Fraction(y) * Fraction(y)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * yy + c
    result = acc * Fraction(y)
    try:
        return float(result)
    except OverflowError:
        return math.inf if result > 0 else -math.inf


@lru_cache(maxsize=None)
def v_coefficients(k: int) -> ProductRule:
    """Determinant product-rule powers v_j(k) = (-1)^(k-1)(-1)^j u_j / 2^(2j+1).

    The division must be exact and every power positive; anything else means
    the u table is broken and raises InternalConsistencyError.
    """
    coeffs = u_coefficients(k).u
    sign_k = 1 if (k - 1) % 2 == 0 else -1
    powers = []
    for j, c in enumerate(coeffs):
        t = sign_k * c if j % 2 == 0 else -sign_k * c
        q, r = divmod(t, 1 << (2 * j + 1))
        if r != 0 or q <= 0:
            raise InternalConsistencyError(
                f"u[{j}] = {c} does not reduce to a positive integer power"
            )
        powers.append(q)
    return ProductRule(k=k, v=tuple(powers))
