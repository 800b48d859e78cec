"""Conditioning and rounding-error utilities, plus an exact rational oracle."""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels

__all__ = [
    "UNIT_ROUNDOFF",
    "ErrorModelParams",
    "OverflowRiskWarning",
    "gamma_bound",
    "lebesgue",
    "basis_terms",
    "basis_terms_exact",
    "eval_exact",
    "backward_error_envelope",
    "binomial_growth",
    "log10_binomial",
    "check_overflow",
]

UNIT_ROUNDOFF = 2.0**-53
_LOG10_MAX = math.log10(sys.float_info.max)


class OverflowRiskWarning(RuntimeWarning):
    """Binomial factors of this grade exceed the binary64 range."""


@dataclass(frozen=True)
class ErrorModelParams:
    """Rounding-error model: unit roundoff ``mu`` and rounding count ``j``."""

    mu: float = UNIT_ROUNDOFF
    j: int = 0

    def __post_init__(self):
        if self.j < 0 or self.mu < 0:
            raise ValueError("j and mu must be nonnegative")
        if self.j * self.mu >= 1:
            raise ValueError(f"j*mu = {self.j * self.mu} must be < 1")

    @property
    def gamma(self) -> float:
        return self.j * self.mu / (1 - self.j * self.mu)


def gamma_bound(j: int, mu: float = UNIT_ROUNDOFF) -> float:
    """``j*mu / (1 - j*mu)``: bound on the product of ``j`` relative roundings."""
    return ErrorModelParams(mu=mu, j=j).gamma


def basis_terms(m: int, n: int, s):
    """Floating-point basis values at ``s`` (scalar or 1-d array).

    Returns ``(phi, psi)`` of shapes ``(m+1, npts)`` and ``(n+1, npts)`` with
    ``H(s) = sum_j p[j] phi[j] + sum_j (-1)**j q[j] psi[j]``.
    """
    s = np.atleast_1d(np.asarray(s, dtype=np.result_type(np.asarray(s).dtype, float)))
    t = 1.0 - s
    with np.errstate(all="ignore"):
        phi = _half_terms(m, n, s, t)
        psi = _half_terms(n, m, t, s)
    return phi, psi


def _half_terms(m, n, x, y):
    # term j = x**j * y**(n+1) * sum_{k<=m-j} C(n+k, k) x**k
    if m < 0:
        return np.zeros((0,) + x.shape, dtype=x.dtype)
    partial = np.empty((m + 1,) + x.shape, dtype=x.dtype)
    a = np.ones_like(x)
    partial[0] = a
    for k in range(1, m + 1):
        a = a * x * (n + k) / k
        partial[k] = partial[k - 1] + a
    yn = y ** (n + 1)
    out = np.empty_like(partial)
    xj = np.ones_like(x)
    for j in range(m + 1):
        out[j] = xj * yn * partial[m - j]
        xj = xj * x
    return out


def basis_terms_exact(m: int, n: int, s):
    """Exact rational counterpart of :func:`basis_terms` at one point."""
    s = Fraction(s)
    t = 1 - s
    phi = [
        s**j * t ** (n + 1) * sum(math.comb(n + k, k) * s**k for k in range(m - j + 1))
        for j in range(m + 1)
    ]
    psi = [
        s ** (m + 1) * t**j * sum(math.comb(m + k, k) * t**k for k in range(n - j + 1))
        for j in range(n + 1)
    ]
    return phi, psi


def lebesgue(m: int, n: int, s):
    """Lebesgue function of the grade-(m, n) blend basis at ``s``.

    On ``0 <= s <= 1`` every term is nonnegative, so this is the blend with
    ``p[j] = 1`` and ``q[j] = (-1)**j`` (linear cost); elsewhere the absolute
    values are taken term by term.
    """
    s_in = np.asarray(s)
    scalar = s_in.ndim == 0
    s_arr = np.atleast_1d(s_in).astype(np.result_type(s_in.dtype, float))
    out = np.empty(s_arr.shape, dtype=float)
    if np.iscomplexobj(s_arr):
        inside = np.zeros(s_arr.shape, dtype=bool)
    else:
        inside = (s_arr >= 0) & (s_arr <= 1)
    if inside.any():
        pts = np.ascontiguousarray(s_arr[inside], dtype=float)
        ones_p = np.ones(m + 1)
        ones_q = np.ones(n + 1)
        out[inside] = _kernels.values(pts, ones_p, ones_q)
    if (~inside).any():
        phi, psi = basis_terms(m, n, s_arr[~inside])
        out[~inside] = np.abs(phi).sum(axis=0) + np.abs(psi).sum(axis=0)
    return out[0].item() if scalar else out


def eval_exact(p, q, s) -> Fraction:
    """Exact rational evaluation of the blend, term by term from the double sums.

    Floats are converted exactly (``Fraction(0.1)`` is the binary value).
    """
    p = [Fraction(v) for v in p]
    q = [Fraction(v) for v in q]
    s = Fraction(s)
    m, n = len(p) - 1, len(q) - 1
    t = 1 - s
    total = Fraction(0)
    for j in range(m + 1):
        inner = sum(math.comb(n + k, k) * s ** (k + j) * t ** (n + 1) for k in range(m - j + 1))
        total += inner * p[j]
    for j in range(n + 1):
        inner = sum(math.comb(m + k, k) * s ** (m + 1) * t ** (k + j) for k in range(n - j + 1))
        total += inner * (-1) ** j * q[j]
    return total


def backward_error_envelope(p, q, s, mu: float = UNIT_ROUNDOFF) -> float:
    """Forward-error envelope implied by the componentwise backward error.

    ``gamma_{3m+2n+4} * sum|p_j phi_j(s)| + gamma_{2m+3n+4} * sum|q_j psi_j(s)|``,
    with the term sums computed exactly. Valid for ``0 <= s <= 1``.
    """
    m, n = len(p) - 1, len(q) - 1
    phi, psi = basis_terms_exact(m, n, s)
    left = sum(abs(Fraction(v) * f) for v, f in zip(p, phi))
    right = sum(abs(Fraction(v) * f) for v, f in zip(q, psi))
    return gamma_bound(3 * m + 2 * n + 4, mu) * float(left) + gamma_bound(
        2 * m + 3 * n + 4, mu
    ) * float(right)


def binomial_growth(m: int) -> float:
    """log10 of the leading-order estimate ``4**m / sqrt(pi*m)`` of C(2m, m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return m * math.log10(4.0) - 0.5 * math.log10(math.pi * m)


def log10_binomial(N: int, k: int) -> float:
    """log10 C(N, k) via lgamma; no overflow for large arguments."""
    return (math.lgamma(N + 1) - math.lgamma(k + 1) - math.lgamma(N - k + 1)) / math.log(10)


def check_overflow(m: int, n: int, stacklevel: int = 2) -> bool:
    """Warn (and return True) when C(m+n, min(m,n)) exceeds binary64."""
    if m < 0 or n < 0:
        return False
    lg = log10_binomial(m + n, min(m, n))
    if lg > _LOG10_MAX:
        warnings.warn(
            f"grade ({m},{n}): C({m + n},{min(m, n)}) ~ 1e{lg:.1f} overflows binary64;"
            " expect NaN where intermediate sums overflow",
            OverflowRiskWarning,
            stacklevel=stacklevel,
        )
        return True
    return False
