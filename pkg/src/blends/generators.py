"""Taylor data for the standard test functions."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .core import Blend, new_blend

__all__ = [
    "gen_cospi",
    "gen_exp_recip",
    "exp_recip_rationals",
    "gen_step",
    "gen_poly",
    "taylor_shift",
    "GENERATORS",
]


def _check_grade(m, n):
    if m < 0 or n < 0:
        raise ValueError(f"grade ({m},{n}) must be nonnegative")


def _cospi_coeffs(count):
    out = np.zeros(count)
    term = 1.0
    for j in range(0, count, 2):
        if j:
            term = -term * math.pi * math.pi / (j * (j - 1))
        out[j] = term
    return out


def gen_cospi(m: int, n: int) -> Blend:
    """Blend of cos(pi*s) on [0, 1]; the right-end series is the negated left one."""
    _check_grade(m, n)
    return new_blend(0.0, 1.0, _cospi_coeffs(m + 1), -_cospi_coeffs(n + 1))


def exp_recip_rationals(count: int) -> list:
    """Rationals r_j with Taylor coefficients of exp(-1/x) at x=1 equal to r_j/e.

    From ``x**2 f' = f`` at ``x = 1 + t``:
    ``(k+1) c[k+1] = (1-2k) c[k] - (k-1) c[k-1]``, ``c[0] = c[1] = 1/e``.
    """
    r = [Fraction(1), Fraction(1)][:count]
    for k in range(1, count - 1):
        r.append(((1 - 2 * k) * r[k] - (k - 1) * r[k - 1]) / (k + 1))
    return r


def gen_exp_recip(m: int, n: int) -> Blend:
    """Blend of exp(-1/s) on [0, 1]: all zeros at the left, exact series at the right."""
    _check_grade(m, n)
    inv_e = math.exp(-1.0)
    q = np.array([float(r) * inv_e for r in exp_recip_rationals(n + 1)])
    return new_blend(0.0, 1.0, np.zeros(m + 1), q)


def gen_step(m: int, n: int) -> Blend:
    """Flat -1 at s=0 blended with flat +1 at s=1."""
    _check_grade(m, n)
    p = np.zeros(m + 1)
    q = np.zeros(n + 1)
    p[0], q[0] = -1.0, 1.0
    return new_blend(0.0, 1.0, p, q)


def taylor_shift(coeffs, x0):
    """Coefficients (ascending) of ``P(x0 + t)`` in ``t`` by repeated synthetic division.

    Works on any numeric type that supports ``+`` and ``*`` (floats, Fractions).
    """
    c = list(coeffs)
    deg = len(c) - 1
    for i in range(deg):
        for k in range(deg - 1, i - 1, -1):
            c[k] = c[k] + x0 * c[k + 1]
    return c


def gen_poly(coeffs, a, b, m: int, n: int) -> Blend:
    """Blend built from the exact Taylor data of a polynomial (ascending coefficients)."""
    _check_grade(m, n)
    h = b - a

    def scaled(x0, count):
        shifted = taylor_shift(coeffs, x0)
        shifted = shifted + [0] * max(0, count - len(shifted))
        return [shifted[j] * h**j for j in range(count)]

    return new_blend(a, b, scaled(a, m + 1), scaled(b, n + 1))


GENERATORS = {
    "cospi": gen_cospi,
    "exp-recip": gen_exp_recip,
    "step": gen_step,
}
