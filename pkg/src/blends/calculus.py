"""Exact integration of blends, antiderivative blends and quadrature rules."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .core import Blend

__all__ = [
    "QuadratureRule",
    "quadrature_weights",
    "integrate",
    "integrate_exact",
    "antiderivative",
    "antiderivative_z",
    "truncation_error_bound",
    "integration_error_bound",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Weights for ``int_0^1 H = sum wp[j] p[j] + sum wq[j] q[j]``.

    Weights are exact rationals; signs ``(-1)**j`` are already folded into ``wq``.
    """

    m: int
    n: int
    wp: tuple
    wq: tuple

    @property
    def exactness_grade(self) -> int:
        return self.m + self.n + 1

    def as_floats(self):
        return _float_weights(self.m, self.n)

    def apply(self, p, q):
        """Apply in floating point: weights are rounded only here."""
        wp, wq = self.as_floats()
        return np.dot(wp, p) + np.dot(wq, q)

    def apply_exact(self, p, q) -> Fraction:
        return sum((w * Fraction(v) for w, v in zip(self.wp, p)), Fraction(0)) + sum(
            (w * Fraction(v) for w, v in zip(self.wq, q)), Fraction(0)
        )


def _weights_uncached(m, n):
    if m < -1 or n < -1 or (m < 0 and n < 0):
        raise ValueError(f"invalid grade ({m},{n})")
    total = factorial(m + n + 2)
    # sum over k of the inner integrals collapses to one factorial ratio per j
    wp = tuple(
        Fraction(factorial(m + 1) * factorial(n + m - j + 1), total * (j + 1) * factorial(m - j))
        for j in range(m + 1)
    )
    wq = tuple(
        (-1) ** j
        * Fraction(factorial(n + 1) * factorial(n + m - j + 1), total * (j + 1) * factorial(n - j))
        for j in range(n + 1)
    )
    return QuadratureRule(m, n, wp, wq)


@functools.lru_cache(maxsize=256)
def _rule(m, n):
    # also serves one-sided (m, -1) and (-1, n) blends
    return _weights_uncached(m, n)


def quadrature_weights(m: int, n: int) -> QuadratureRule:
    """Exact rational weights of the full-interval integral of a grade-(m, n) blend."""
    if m < 0 or n < 0:
        raise ValueError(f"quadrature weights need m, n >= 0, got ({m},{n})")
    return _rule(m, n)


@functools.lru_cache(maxsize=256)
def _float_weights(m, n):
    rule = _rule(m, n)
    wp = np.array([float(w) for w in rule.wp], dtype=float)
    wq = np.array([float(w) for w in rule.wq], dtype=float)
    wp.setflags(write=False)
    wq.setflags(write=False)
    return wp, wq


def integrate(blend: Blend):
    """``int_a^b H dz = h * int_0^1 H ds``, exact up to rounding."""
    unit = _rule(blend.m, blend.n).apply(blend.p, blend.q)
    return (blend.h * unit).item()


def integrate_exact(p, q, a=0, b=1) -> Fraction:
    """Exact rational integral for rational data (floats converted exactly)."""
    p = [Fraction(v) for v in p]
    q = [Fraction(v) for v in q]
    rule = _rule(len(p) - 1, len(q) - 1)
    return (Fraction(b) - Fraction(a)) * rule.apply_exact(p, q)


def antiderivative(blend: Blend, F0=0.0) -> Blend:
    """Grade-(m+1, n+1) blend of ``F(s) = F0 + int_0^s H`` in the unit variable.

    No coefficient is dropped, so the grade is one more than the true degree.
    """
    unit = _rule(blend.m, blend.n).apply(blend.p, blend.q)
    j_p = np.arange(1, blend.p.size + 1)
    j_q = np.arange(1, blend.q.size + 1)
    p = np.concatenate([[F0], blend.p / j_p])
    q = np.concatenate([[F0 + unit], blend.q / j_q])
    return Blend(blend.a, blend.b, p, q)


def antiderivative_z(blend: Blend, F0=0.0) -> Blend:
    """Blend of ``F(z) = F0 + int_a^z H dz`` in the original variable."""
    h = blend.h
    j_p = np.arange(1, blend.p.size + 1)
    j_q = np.arange(1, blend.q.size + 1)
    p = np.concatenate([[F0], h * blend.p / j_p])
    q = np.concatenate([[F0 + integrate(blend)], h * blend.q / j_q])
    return Blend(blend.a, blend.b, p, q)


def _check_M(M):
    if M < 0:
        raise ValueError("derivative bound M must be nonnegative")


def truncation_error_bound(m: int, n: int, M) -> float:
    """Bound on ``|f - H|`` over [0, 1] given ``|f^(m+n+2)| <= M``.

    ``M/(m+n+2)! * max s**(m+1) (1-s)**(n+1)``, the max being attained at
    ``s = (m+1)/(m+n+2)``. Evaluated exactly, rounded once.
    """
    _check_M(M)
    if M == 0:
        return 0.0
    N = m + n + 2
    s_star = Fraction(m + 1, N)
    peak = s_star ** (m + 1) * (1 - s_star) ** (n + 1)
    return float(Fraction(M) * peak / factorial(N))


def integration_error_bound(m: int, n: int, M) -> float:
    """Bound on the error of the blend's integral over [0, 1]."""
    _check_M(M)
    if M == 0:
        return 0.0
    N = m + n + 2
    beta = Fraction(factorial(m + 1) * factorial(n + 1), factorial(N + 1))
    return float(beta * Fraction(M) / factorial(N))
