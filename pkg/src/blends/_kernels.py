"""Hot loops: the half-sum Horner procedure, for values and for jets.

Two interchangeable backends with identical floating-point operation order:

* ``numba`` -- scalar loops over blocks of points, parallel over blocks;
* ``numpy`` -- the same recurrences vectorized across points.

The prefix sums of the binomial recurrence are consumed in increasing index
order by the Horner loop, so both backends stream them and never store the
``a`` array. Jets carry Taylor coefficients (not derivatives); sigma is seeded
as ``sigma0 + slope*t`` with ``slope = +1`` for the left half and ``-1`` for
the right half.
"""

import contextlib

import numpy as np

from . import _jit
from ._jit import njit, prange
from .core import Jet

__all__ = ["backend", "use_backend", "values", "jets", "hsf_values", "hsf_jets"]


# -- numba -------------------------------------------------------------------


@njit
def _hsf_scalar_nb(m, n, sigma, w):
    if m < 0:
        return sigma * 0.0
    a = 1.0
    acc = 1.0
    u = 0.0
    u = acc * w[m] + sigma * u
    for k in range(1, m + 1):
        a = (n + k) * (sigma * a) / k
        acc = acc + a
        u = acc * w[m - k] + sigma * u
    one_minus = 1.0 - sigma
    c = 1.0
    for _ in range(n + 1):
        c = one_minus * c
    return c * u


@njit
def _affine_inplace(x, value, slope):
    # x <- (value + slope*t) * x, truncated; walk down so x[i-1] is still old
    for i in range(x.shape[0] - 1, 0, -1):
        x[i] = value * x[i] + slope * x[i - 1]
    x[0] = value * x[0]


@njit
def _hsf_jet_nb(m, n, sigma, slope, w, a, acc, u, c, e):
    K = e.shape[0]
    for i in range(K):
        e[i] = 0.0
    if m < 0:
        return
    for i in range(K):
        a[i] = 0.0
        acc[i] = 0.0
        u[i] = 0.0
        c[i] = 0.0
    a[0] = 1.0
    acc[0] = 1.0
    c[0] = 1.0
    _affine_inplace(u, sigma, slope)
    for i in range(K):
        u[i] = acc[i] * w[m] + u[i]
    for k in range(1, m + 1):
        _affine_inplace(a, sigma, slope)
        for i in range(K):
            a[i] = (n + k) * a[i] / k
            acc[i] = acc[i] + a[i]
        _affine_inplace(u, sigma, slope)
        for i in range(K):
            u[i] = acc[i] * w[m - k] + u[i]
    one_minus = 1.0 - sigma
    for _ in range(n + 1):
        _affine_inplace(c, one_minus, -slope)
    for i in range(K):
        t = c[0] * u[i]
        for ell in range(1, i + 1):
            t = t + c[ell] * u[i - ell]
        e[i] = t


_BLOCK = 256


@njit
def _hsf_block_nb(m, n, sigma, w, res):
    # the scalar recurrence, run for a block of points with the point loop
    # innermost so independent divisions pipeline; per-point order unchanged
    B = sigma.shape[0]
    if m < 0:
        for j in range(B):
            res[j] = sigma[j] * 0.0
        return
    a = np.ones(B, sigma.dtype)
    acc = np.ones(B, sigma.dtype)
    u = np.empty(B, res.dtype)
    for j in range(B):
        u[j] = acc[j] * w[m] + sigma[j] * 0.0
    for k in range(1, m + 1):
        wk = w[m - k]
        for j in range(B):
            a[j] = (n + k) * (sigma[j] * a[j]) / k
            acc[j] = acc[j] + a[j]
            u[j] = acc[j] * wk + sigma[j] * u[j]
    for j in range(B):
        one_minus = 1.0 - sigma[j]
        c = 1.0
        for _ in range(n + 1):
            c = one_minus * c
        res[j] = c * u[j]


@njit(parallel=True)
def _values_nb(s, p, qt, out):
    m = p.shape[0] - 1
    n = qt.shape[0] - 1
    N = s.shape[0]
    nblocks = (N + _BLOCK - 1) // _BLOCK
    for b in prange(nblocks):
        lo = b * _BLOCK
        hi = min(N, lo + _BLOCK)
        x = s[lo:hi]
        left = np.empty(hi - lo, out.dtype)
        right = np.empty(hi - lo, out.dtype)
        _hsf_block_nb(m, n, x, p, left)
        _hsf_block_nb(n, m, 1.0 - x, qt, right)
        for j in range(hi - lo):
            out[lo + j] = left[j] + right[j]


@njit(parallel=True)
def _jets_nb(s, p, qt, out):
    m = p.shape[0] - 1
    n = qt.shape[0] - 1
    K = out.shape[1]
    for i in prange(s.shape[0]):
        work = np.zeros((6, K), out.dtype)
        x = s[i]
        _hsf_jet_nb(m, n, x, 1.0, p, work[0], work[1], work[2], work[3], work[4])
        _hsf_jet_nb(n, m, 1.0 - x, -1.0, qt, work[0], work[1], work[2], work[3], work[5])
        for k in range(K):
            out[i, k] = work[4, k] + work[5, k]


@njit
def _hsf_single_nb(m, n, sigma, w):
    return _hsf_scalar_nb(m, n, sigma, w)


# -- numpy -------------------------------------------------------------------


def _hsf_values_np(m, n, sigma, w):
    if m < 0:
        return sigma * 0.0
    a = np.ones_like(sigma)
    acc = np.ones_like(sigma)
    u = np.zeros_like(sigma)
    u = acc * w[m] + sigma * u
    for k in range(1, m + 1):
        a = (n + k) * (sigma * a) / k
        acc = acc + a
        u = acc * w[m - k] + sigma * u
    one_minus = 1.0 - sigma
    c = np.ones_like(sigma)
    for _ in range(n + 1):
        c = one_minus * c
    return c * u


def _hsf_jets_np(m, n, sigma, slope, w, order):
    if m < 0:
        return Jet(np.zeros((order + 1,) + sigma.shape, dtype=sigma.dtype))
    a = Jet.constant(np.ones_like(sigma), order)
    acc = Jet.constant(np.ones_like(sigma), order)
    u = Jet.constant(np.zeros_like(sigma), order)
    u = acc * w[m] + u.mul_affine(sigma, slope)
    for k in range(1, m + 1):
        a = Jet((n + k) * a.mul_affine(sigma, slope).coeffs / k)
        acc = acc + a
        u = acc * w[m - k] + u.mul_affine(sigma, slope)
    one_minus = 1.0 - sigma
    c = Jet.constant(np.ones_like(sigma), order)
    for _ in range(n + 1):
        c = c.mul_affine(one_minus, -slope)
    return c * u


def _values_np(s, p, qt, out):
    m = p.shape[0] - 1
    n = qt.shape[0] - 1
    with np.errstate(all="ignore"):
        out[:] = _hsf_values_np(m, n, s, p) + _hsf_values_np(n, m, 1.0 - s, qt)


def _jets_np(s, p, qt, out):
    m = p.shape[0] - 1
    n = qt.shape[0] - 1
    order = out.shape[1] - 1
    with np.errstate(all="ignore"):
        left = _hsf_jets_np(m, n, s, 1.0, p, order)
        right = _hsf_jets_np(n, m, 1.0 - s, -1.0, qt, order)
        out[:] = (left.coeffs + right.coeffs).T


# -- dispatch ----------------------------------------------------------------

_BACKENDS = {"numpy": (_values_np, _jets_np)}
if _jit.HAVE_NUMBA:
    _BACKENDS["numba"] = (_values_nb, _jets_nb)

_active = "numba" if _jit.USE_NUMBA else "numpy"


def backend():
    """Name of the active kernel backend (``"numba"`` or ``"numpy"``)."""
    return _active


def available_backends():
    return tuple(_BACKENDS)


@contextlib.contextmanager
def use_backend(name):
    """Temporarily switch kernels, e.g. for benchmarks and cross-checks."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {sorted(_BACKENDS)}")
    previous = _active
    _active = name
    try:
        yield
    finally:
        _active = previous


def values(s, p, qt):
    """Blend values at every ``s``; ``qt[j] = (-1)**j * q[j]``."""
    out = np.empty(s.shape[0], dtype=s.dtype)
    if s.shape[0]:
        if _active == "numba":
            _jit.apply_thread_cap()
        _BACKENDS[_active][0](s, p, qt, out)
    return out


def jets(s, p, qt, order):
    """Taylor coefficients (orders 0..order, in s) of the blend at every ``s``."""
    out = np.empty((s.shape[0], order + 1), dtype=s.dtype)
    if s.shape[0]:
        if _active == "numba":
            _jit.apply_thread_cap()
        _BACKENDS[_active][1](s, p, qt, out)
    return out


def hsf_values(m, n, sigma, w):
    """Single half-sum at scalar ``sigma`` through the active backend."""
    if _active == "numba":
        return _hsf_single_nb(m, n, sigma, w)
    with np.errstate(all="ignore"):
        return _hsf_values_np(m, n, np.asarray(sigma), w)[()]


def hsf_jets(m, n, sigma, slope, w, order):
    """Single half-sum jet (Taylor coefficients in sigma) at scalar ``sigma``."""
    sigma = np.asarray([sigma])
    w = np.asarray(w, dtype=np.result_type(w, sigma))
    sigma = sigma.astype(w.dtype)
    if _active == "numba":
        work = np.zeros((5, order + 1), dtype=sigma.dtype)
        _hsf_jet_nb(m, n, sigma[0], slope, w, work[0], work[1], work[2], work[3], work[4])
        return work[4]
    with np.errstate(all="ignore"):
        return _hsf_jets_np(m, n, sigma, slope, w, order).coeffs[:, 0]
