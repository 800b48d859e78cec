"""Blend data model: construction, the change of variable and reflection, plus jets.

A blend of grade (m, n) on [a, b] is stored through its *scaled* Taylor
coefficients in the unit variable ``s = (z - a) / (b - a)``::

    p[j] = f^(j)(a) * h**j / j!     (j = 0..m)
    q[j] = f^(j)(b) * h**j / j!     (j = 0..n)

with ``h = b - a``. One of ``p``/``q`` may be empty, giving a one-sided
(m, -1) or (-1, n) blend, which is just a Taylor polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

__all__ = ["Blend", "Jet", "new_blend", "from_derivatives", "reflect"]


def _coeff_array(values, name):
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.dtype.kind in "biuf" or arr.size == 0:
        arr = arr.astype(np.float64)
    elif arr.dtype.kind == "c":
        arr = arr.astype(np.complex128)
    else:
        # object arrays, e.g. Fractions or numeric strings
        try:
            arr = np.array([float(v) for v in arr], dtype=np.float64)
        except TypeError:
            arr = np.array([complex(v) for v in arr], dtype=np.complex128)
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _endpoint(x):
    # exact inputs (int, Fraction) become floats so z -> s stays numeric
    return x if isinstance(x, (complex, np.complexfloating)) else float(x)


@dataclass(frozen=True, eq=False)
class Blend:
    """Two-point Hermite interpolant on ``[a, b]``.

    ``p`` and ``q`` hold scaled Taylor coefficients at ``s = 0`` and ``s = 1``.
    Instances are immutable; the coefficient arrays are read-only.
    """

    a: float
    b: float
    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", _endpoint(self.a))
        object.__setattr__(self, "b", _endpoint(self.b))
        object.__setattr__(self, "p", _coeff_array(self.p, "p"))
        object.__setattr__(self, "q", _coeff_array(self.q, "q"))
        if self.a == self.b:
            raise ValueError("blend endpoints must differ (a == b)")
        if self.p.size == 0 and self.q.size == 0:
            raise ValueError("at least one of p, q must be nonempty")

    @property
    def m(self) -> int:
        return self.p.size - 1

    @property
    def n(self) -> int:
        return self.q.size - 1

    @property
    def grade(self) -> int:
        """Degree bound ``m + n + 1`` of the represented polynomial."""
        return self.m + self.n + 1

    @property
    def h(self):
        return self.b - self.a

    @property
    def dtype(self):
        return np.result_type(self.p.dtype, self.q.dtype)

    def to_s(self, z):
        return (np.asarray(z) - self.a) / self.h

    def __call__(self, z, nder=0):
        """Evaluate at ``z`` (in the original variable).

        Scalar in gives scalar out when ``nder == 0`` and a length ``nder+1``
        array otherwise; an array in gives an array of the same length, with
        a trailing derivative axis when ``nder > 0``.
        """
        from .evaluation import eval_grid

        z_arr = np.asarray(z)
        scalar = z_arr.ndim == 0
        s = np.atleast_1d(self.to_s(z_arr))
        out = eval_grid(self, s, nder)
        if nder == 0:
            out = out[:, 0]
            return out[0].item() if scalar else out
        return out[0] if scalar else out

    def __repr__(self):
        return f"Blend(a={self.a!r}, b={self.b!r}, m={self.m}, n={self.n})"


def new_blend(a, b, p, q, m=None, n=None) -> Blend:
    """Build a blend from scaled coefficients; ``m``/``n`` may truncate ``p``/``q``."""
    p = np.asarray(p)
    q = np.asarray(q)
    if m is not None:
        if m < -1 or m + 1 > p.size:
            raise ValueError(f"m={m} incompatible with {p.size} p-coefficients")
        p = p[: m + 1]
    if n is not None:
        if n < -1 or n + 1 > q.size:
            raise ValueError(f"n={n} incompatible with {q.size} q-coefficients")
        q = q[: n + 1]
    return Blend(a, b, p, q)


def _scale(derivs, h):
    """Map raw derivatives f^(j) to f^(j) * h**j / j! with a running factor."""
    derivs = np.asarray(derivs)
    dtype = np.result_type(derivs.dtype, np.asarray(h).dtype, np.float64)
    out = np.empty(derivs.size, dtype=dtype)
    factor = 1.0
    for j, d in enumerate(derivs):
        if j:
            factor = factor * h / j
        out[j] = d * factor
    return out


def from_derivatives(a, b, dp, dq, m=None, n=None) -> Blend:
    """Build a blend from raw derivative values at both endpoints."""
    if a == b:
        raise ValueError("blend endpoints must differ (a == b)")
    h = b - a
    return new_blend(a, b, _scale(dp, h), _scale(dq, h), m=m, n=n)


def reflect(blend: Blend) -> Blend:
    """Blend of ``g(s) = f(1 - s)``: endpoints swap, odd coefficients flip sign."""
    p_sign = (-1.0) ** np.arange(blend.q.size)
    q_sign = (-1.0) ** np.arange(blend.p.size)
    return Blend(blend.b, blend.a, p_sign * blend.q, q_sign * blend.p)


class Jet:
    """Truncated Taylor polynomial ``c[0] + c[1] t + ... + c[order] t**order``.

    ``coeffs`` has the order along axis 0; trailing axes batch independent
    jets (one per evaluation point, say). Arithmetic stays at fixed order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs)

    @classmethod
    def variable(cls, value, order, slope=1.0):
        value = np.asarray(value)
        coeffs = np.zeros((order + 1,) + value.shape, dtype=np.result_type(value, float))
        coeffs[0] = value
        if order >= 1:
            coeffs[1] = slope
        return cls(coeffs)

    @classmethod
    def constant(cls, value, order):
        return cls.variable(value, order, slope=0.0)

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.coeffs + other.coeffs)
        out = self.coeffs.copy()
        out[0] = out[0] + other
        return Jet(out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.coeffs * other)
        if other.order != self.order:
            raise ValueError("jet orders differ")
        c, u = self.coeffs, other.coeffs
        out = np.empty(np.broadcast_shapes(c.shape, u.shape), dtype=np.result_type(c, u))
        for i in range(self.order + 1):
            acc = c[0] * u[i]
            for ell in range(1, i + 1):
                acc = acc + c[ell] * u[i - ell]
            out[i] = acc
        return Jet(out)

    __rmul__ = __mul__

    def mul_affine(self, value, slope):
        """Product with the affine jet ``value + slope * t``; O(order)."""
        c = self.coeffs
        out = value * c
        if self.order >= 1:
            out[1:] = out[1:] + slope * c[:-1]
        return Jet(out)

    def derivatives(self):
        """Derivative values ``k! * c[k]``."""
        fac = np.array([float(factorial(k)) for k in range(self.order + 1)])
        return self.coeffs * fac.reshape((-1,) + (1,) * (self.coeffs.ndim - 1))

    def __repr__(self):
        return f"Jet(order={self.order}, coeffs={self.coeffs!r})"
