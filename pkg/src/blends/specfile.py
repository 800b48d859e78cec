"""JSON spec files for blends and strings of blends.

Blend spec: ``{"a": .., "b": .., "p": [..], "q": [..]}``.
String spec: ``{"knots": [..], "taylor": [[..], ..]}``.

Numbers may be JSON numbers or decimal/rational strings ("0.1", "1/3"); both
are read exactly as rationals and rounded once to binary64 when a float
object is built.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .blendstring import BlendString
from .core import Blend

__all__ = [
    "SpecError",
    "BlendSpec",
    "parse_blend_spec",
    "parse_string_spec",
    "load_json",
    "blend_to_spec",
    "string_to_spec",
]


class SpecError(ValueError):
    """Malformed blend or string spec."""


def _rational(value, where):
    if isinstance(value, bool):
        raise SpecError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise SpecError(f"{where}: non-finite value {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SpecError(f"{where}: cannot parse {value!r} as a number") from None
    raise SpecError(f"{where}: expected a number, got {type(value).__name__}")


def _rational_list(values, where):
    if not isinstance(values, list):
        raise SpecError(f"{where}: expected an array")
    return [_rational(v, f"{where}[{i}]") for i, v in enumerate(values)]


def load_json(text: str):
    """Parse JSON keeping every float literal exact (as a Fraction)."""
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from None


@dataclass(frozen=True)
class BlendSpec:
    """Exact rational blend data as read from a spec file."""

    a: Fraction
    b: Fraction
    p: tuple
    q: tuple

    def to_blend(self) -> Blend:
        return Blend(float(self.a), float(self.b), [float(v) for v in self.p], [float(v) for v in self.q])


def parse_blend_spec(obj) -> BlendSpec:
    if isinstance(obj, str):
        obj = load_json(obj)
    if not isinstance(obj, dict):
        raise SpecError("blend spec must be a JSON object")
    missing = [k for k in ("a", "b", "p", "q") if k not in obj]
    if missing:
        raise SpecError(f"blend spec missing keys: {', '.join(missing)}")
    spec = BlendSpec(
        _rational(obj["a"], "a"),
        _rational(obj["b"], "b"),
        tuple(_rational_list(obj["p"], "p")),
        tuple(_rational_list(obj["q"], "q")),
    )
    if spec.a == spec.b:
        raise SpecError("endpoints a and b must differ")
    if not spec.p and not spec.q:
        raise SpecError("p and q cannot both be empty")
    return spec


def parse_string_spec(obj) -> BlendString:
    if isinstance(obj, str):
        obj = load_json(obj)
    if not isinstance(obj, dict) or "knots" not in obj or "taylor" not in obj:
        raise SpecError('string spec must be an object with "knots" and "taylor"')
    knots = [float(z) for z in _rational_list(obj["knots"], "knots")]
    rows = obj["taylor"]
    if not isinstance(rows, list):
        raise SpecError("taylor: expected an array of arrays")
    taylor = [[float(v) for v in _rational_list(row, f"taylor[{i}]")] for i, row in enumerate(rows)]
    try:
        return BlendString(tuple(knots), tuple(taylor))
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def _num(x):
    if isinstance(x, complex):
        raise SpecError("complex coefficients cannot be written to a spec file")
    x = float(x)
    if x.is_integer() and abs(x) < 2**53:
        return int(x)
    return x


def blend_to_spec(blend: Blend) -> dict:
    """Spec dict for a blend; float reprs round-trip exactly."""
    return {
        "a": _num(blend.a),
        "b": _num(blend.b),
        "p": [_num(v) for v in blend.p],
        "q": [_num(v) for v in blend.q],
    }


def string_to_spec(bs: BlendString) -> dict:
    return {
        "knots": [_num(z) for z in bs.knots],
        "taylor": [[_num(v) for v in row] for row in bs.taylor],
    }
