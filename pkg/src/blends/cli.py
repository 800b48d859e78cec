"""Command-line front end.

Exit codes: 0 success, 2 bad input (malformed spec, bad points, bad
arguments), 3 I/O failure. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from fractions import Fraction

import numpy as np

from . import _jit
from .analysis import lebesgue
from .blendstring import string_eval, string_integrate
from .calculus import antiderivative_z, integrate, integrate_exact, quadrature_weights
from .evaluation import eval_grid
from .generators import GENERATORS, gen_poly
from .specfile import (
    SpecError,
    blend_to_spec,
    parse_blend_spec,
    parse_string_spec,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3


class InputError(Exception):
    pass


class IOFailure(Exception):
    pass


def fmt(x) -> str:
    """Shortest round-trip decimal; integral values lose the trailing ``.0``."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if x.is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def parse_points(spec: str):
    """``start:end:count`` -> count points, endpoints included exactly."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError(f"points spec {spec!r} must look like start:end:count")
    try:
        start, end = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise InputError(f"points spec {spec!r} is not numeric") from None
    if count < 2:
        raise InputError(f"points spec {spec!r}: count must be >= 2")
    if not (math.isfinite(start) and math.isfinite(end)):
        raise InputError(f"points spec {spec!r}: endpoints must be finite")
    i = np.arange(count)
    pts = start + (end - start) * i / (count - 1)
    pts[0], pts[-1] = start, end
    return pts


def _points(args):
    if args.points is not None and args.at:
        raise InputError("use either --points or --at, not both")
    if args.points is not None:
        return parse_points(args.points)
    if args.at:
        return np.array(args.at, dtype=float)
    raise InputError("one of --points or --at is required")


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_blend_spec(path):
    return parse_blend_spec(_read(path))


class _Output:
    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path in (None, "-"):
            self.fh = sys.stdout
        else:
            try:
                self.fh = open(self.path, "w", encoding="utf-8", newline="")
            except OSError as exc:
                raise IOFailure(f"cannot write {self.path}: {exc.strerror or exc}") from None
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        return False


def _write_table(out, header, first_col, table):
    out.write(",".join(header) + "\n")
    for x, row in zip(first_col, table):
        out.write(",".join([fmt(x)] + [fmt(v) for v in row]) + "\n")


def _deriv_header(nder):
    return ["z"] + [f"h{k}" for k in range(nder + 1)]


def cmd_eval(args):
    blend = _load_blend_spec(args.spec).to_blend()
    z = _points(args)
    table = eval_grid(blend, (z - blend.a) / blend.h, args.nder)
    with _Output(args.output) as out:
        _write_table(out, _deriv_header(args.nder), z, table)


def cmd_integrate(args):
    spec = _load_blend_spec(args.spec)
    if args.exact:
        value = integrate_exact(spec.p, spec.q, spec.a, spec.b)
        print(value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}")
    else:
        print(fmt(integrate(spec.to_blend())))


def cmd_weights(args):
    if args.m < 0 or args.n < 0:
        raise InputError("m and n must be nonnegative")
    rule = quadrature_weights(args.m, args.n)
    show = str if args.format == "fractions" else (lambda w: repr(float(w)))
    print("side,j,weight")
    for side, weights in (("p", rule.wp), ("q", rule.wq)):
        for j, w in enumerate(weights):
            print(f"{side},{j},{show(w)}")


def cmd_lebesgue(args):
    if args.m < 0 or args.n < 0:
        raise InputError("m and n must be nonnegative")
    s = _points(args)
    values = lebesgue(args.m, args.n, s)
    with _Output(args.output) as out:
        _write_table(out, ["s", "L"], s, values.reshape(-1, 1))


def cmd_gen(args):
    if args.m < 0 or args.n < 0:
        raise InputError("m and n must be nonnegative")
    if args.name == "poly":
        if not args.coeffs:
            raise InputError("gen poly needs --coeffs")
        a, b = args.interval
        if a == b:
            raise InputError("interval endpoints must differ")
        blend = gen_poly([Fraction(c) for c in args.coeffs], Fraction(a), Fraction(b), args.m, args.n)
    else:
        blend = GENERATORS[args.name](args.m, args.n)
    print(json.dumps(blend_to_spec(blend)))


def cmd_antiderivative(args):
    blend = _load_blend_spec(args.spec).to_blend()
    print(json.dumps(blend_to_spec(antiderivative_z(blend, float(args.initial)))))


def cmd_string_eval(args):
    bs = parse_string_spec(_read(args.spec))
    z = _points(args)
    lo, hi = bs.knots[0], bs.knots[-1]
    bad = z[(z < lo) | (z > hi)]
    if bad.size:
        raise InputError(f"point {fmt(bad[0])} outside [{fmt(lo)}, {fmt(hi)}]")
    table = np.array([string_eval(bs, zi, args.nder) for zi in z]).reshape(z.size, args.nder + 1)
    with _Output(args.output) as out:
        _write_table(out, _deriv_header(args.nder), z, table)


def cmd_string_integrate(args):
    print(fmt(string_integrate(parse_string_spec(_read(args.spec)))))


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="blends", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_points(p):
        p.add_argument("--points", help="start:end:count grid, endpoints included")
        p.add_argument("--at", type=float, action="append", default=[], help="single point (repeatable)")

    p = sub.add_parser("eval", help="evaluate a blend and derivatives on points")
    p.add_argument("--spec", required=True)
    add_points(p)
    p.add_argument("--nder", type=_nonneg_int, default=0)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("integrate", help="integral of a blend over [a, b]")
    p.add_argument("--spec", required=True)
    p.add_argument("--exact", action="store_true", help="exact rational result")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("weights", help="quadrature weights of a grade-(m,n) blend")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["fractions", "decimals"], default="fractions")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("lebesgue", help="Lebesgue function on points in s")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    add_points(p)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lebesgue)

    p = sub.add_parser("gen", help="emit a blend spec for a built-in function")
    p.add_argument("name", choices=sorted(GENERATORS) + ["poly"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--coeffs", type=_fraction, nargs="+", help="poly: ascending coefficients")
    p.add_argument("--interval", type=_fraction, nargs=2, default=[Fraction(0), Fraction(1)], metavar=("A", "B"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("antiderivative", help="blend spec of F(z) = F0 + int_a^z H")
    p.add_argument("--spec", required=True)
    p.add_argument("--initial", type=_fraction, default=Fraction(0), help="F0, the value at a")
    p.set_defaults(func=cmd_antiderivative)

    p = sub.add_parser("string-eval", help="evaluate a string of blends")
    p.add_argument("--spec", required=True)
    add_points(p)
    p.add_argument("--nder", type=_nonneg_int, default=0)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_string_eval)

    p = sub.add_parser("string-integrate", help="composite integral of a string of blends")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_string_integrate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        _jit.thread_cap()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", RuntimeWarning)
            args.func(args)
        for w in caught:
            print(f"blends: warning: {w.message}", file=sys.stderr)
    except IOFailure as exc:
        print(f"blends: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InputError, SpecError, ValueError) as exc:
        print(f"blends: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_IO
    return EXIT_OK


def entry():
    sys.exit(main())
