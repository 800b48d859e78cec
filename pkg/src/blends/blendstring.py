"""Strings of blends: piecewise blends sharing Taylor data at the knots."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .calculus import integrate
from .core import Blend
from .evaluation import eval_derivatives

__all__ = ["BlendString", "string_eval", "string_integrate", "string_antiderivative"]


@dataclass(frozen=True, eq=False)
class BlendString:
    """Knots ``z_0 < ... < z_K`` with unscaled Taylor coefficients at each knot.

    ``taylor[i][j] = f^(j)(z_i) / j!``. Piece ``i`` is the blend on
    ``[z_i, z_{i+1}]``; each piece applies its own ``h_i**j`` scaling.
    """

    knots: tuple
    taylor: tuple

    def __post_init__(self):
        knots = tuple(float(z) for z in self.knots)
        taylor = []
        for row in self.taylor:
            arr = np.array(row, dtype=np.result_type(np.asarray(row).dtype, float))
            if arr.ndim != 1 or arr.size == 0:
                raise ValueError("each knot needs a nonempty 1-d Taylor array")
            arr.setflags(write=False)
            taylor.append(arr)
        if len(knots) < 2:
            raise ValueError("a string needs at least two knots")
        if len(taylor) != len(knots):
            raise ValueError(f"{len(knots)} knots but {len(taylor)} Taylor arrays")
        if any(b <= a for a, b in zip(knots, knots[1:])):
            raise ValueError("knots must be strictly increasing")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "taylor", tuple(taylor))

    @property
    def num_pieces(self) -> int:
        return len(self.knots) - 1

    def piece(self, i: int) -> Blend:
        a, b = self.knots[i], self.knots[i + 1]
        h = b - a
        left, right = self.taylor[i], self.taylor[i + 1]
        return Blend(a, b, left * h ** np.arange(left.size), right * h ** np.arange(right.size))

    def locate(self, z) -> int:
        """Index of the piece containing ``z``; pieces are half-open, the last closed."""
        if not self.knots[0] <= z <= self.knots[-1]:
            raise ValueError(f"z={z} outside [{self.knots[0]}, {self.knots[-1]}]")
        return min(bisect.bisect_right(self.knots, z) - 1, self.num_pieces - 1)


def string_eval(bs: BlendString, z, nder: int = 0) -> np.ndarray:
    """Value and z-derivatives up to ``nder`` of the string at ``z``."""
    i = bs.locate(z)
    blend = bs.piece(i)
    return eval_derivatives(blend, (z - blend.a) / blend.h, nder)


def string_integrate(bs: BlendString):
    """Composite integral over all pieces, summed left to right."""
    total = 0.0
    for i in range(bs.num_pieces):
        total = total + integrate(bs.piece(i))
    return total


def string_antiderivative(bs: BlendString, F0=0.0) -> BlendString:
    """String for ``F(z) = F0 + int_{z_0}^z``; every knot gains one order."""
    values = [F0]
    for i in range(bs.num_pieces):
        values.append(values[-1] + integrate(bs.piece(i)))
    taylor = [
        np.concatenate([[v], row / np.arange(1, row.size + 1)])
        for v, row in zip(values, bs.taylor)
    ]
    return BlendString(bs.knots, tuple(taylor))
