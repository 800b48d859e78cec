"""Linear-cost evaluation of blends and their derivatives."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .core import Blend

__all__ = ["hsf", "eval_blend", "eval_derivatives", "eval_grid"]


def hsf(m: int, n: int, sigma, w):
    """One half-sum of the two-point Hermite formula, in Horner form.

    Evaluates ``(1-sigma)**(n+1) * sum_j w[j] sigma**j sum_{k<=m-j} C(n+k,k) sigma**k``
    in O(m + n) operations. The other half is ``hsf(n, m, 1-s, (-1)**j q[j])``.
    ``m = -1`` (empty ``w``) gives 0.
    """
    w = np.asarray(w)
    if w.size != m + 1:
        raise ValueError(f"expected {m + 1} coefficients, got {w.size}")
    dtype = np.result_type(w.dtype, np.asarray(sigma).dtype, np.float64)
    w = w.astype(dtype)
    return dtype.type(_kernels.hsf_values(m, n, dtype.type(sigma), w)).item()


def _prepare(blend: Blend, s):
    s = np.asarray(s)
    dtype = np.result_type(blend.dtype, s.dtype, np.float64)
    s = np.ascontiguousarray(s.reshape(-1), dtype=dtype)
    p = np.ascontiguousarray(blend.p, dtype=dtype)
    sign = (-1.0) ** np.arange(blend.q.size)
    qt = np.ascontiguousarray(sign * blend.q, dtype=dtype)
    return s, p, qt


def _z_factors(h, nder):
    # k! / h**k, built incrementally so large k does not overflow k! first
    fac = np.empty(nder + 1, dtype=np.result_type(np.asarray(h).dtype, np.float64))
    fac[0] = 1.0
    for k in range(1, nder + 1):
        fac[k] = fac[k - 1] * k / h
    return fac


def eval_blend(blend: Blend, s):
    """Value of the blend at unit-interval coordinate ``s`` (real or complex)."""
    s_arr, p, qt = _prepare(blend, s)
    return _kernels.values(s_arr, p, qt)[0].item()


def eval_derivatives(blend: Blend, s, nder: int) -> np.ndarray:
    """Derivatives ``d^k H/dz^k`` for k = 0..nder at ``z = a + s*h``."""
    return eval_grid(blend, np.asarray([s]), nder)[0]


def eval_grid(blend: Blend, points, nder: int = 0) -> np.ndarray:
    """Evaluate ``eval_derivatives`` at every point; shape ``(len(points), nder+1)``.

    NaNs from overflow at extreme grades are kept, not masked.
    """
    if nder < 0:
        raise ValueError("nder must be nonnegative")
    from .analysis import check_overflow

    check_overflow(blend.m, blend.n, stacklevel=3)
    s, p, qt = _prepare(blend, points)
    if nder == 0:
        return _kernels.values(s, p, qt).reshape(-1, 1)
    taylor = _kernels.jets(s, p, qt, nder)
    return taylor * _z_factors(blend.h, nder)


def taylor_at(blend: Blend, s, order: int) -> np.ndarray:
    """Local Taylor coefficients in ``s`` (orders 0..order) at ``s``."""
    s_arr, p, qt = _prepare(blend, np.asarray([s]))
    return _kernels.jets(s_arr, p, qt, order)[0]

