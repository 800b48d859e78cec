"""Independent reference computations used by the tests.

Nothing here calls the package's evaluation path.
"""

from fractions import Fraction
from math import comb


def solve_exact(A, b):
    """Gauss-Jordan elimination over the rationals."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[-1] for row in M]


def hermite_monomial(p, q):
    """Monomial coefficients (in s) of the unique grade-(m+n+1) polynomial with
    Taylor coefficients ``p`` at 0 and ``q`` at 1, via the confluent Vandermonde
    system."""
    m, n = len(p) - 1, len(q) - 1
    N = m + n + 2
    rows, rhs = [], []
    for j in range(m + 1):
        rows.append([1 if k == j else 0 for k in range(N)])
        rhs.append(p[j])
    for j in range(n + 1):
        # j-th Taylor coefficient at s = 1 of sum c_k s^k is sum_k C(k, j) c_k
        rows.append([comb(k, j) for k in range(N)])
        rhs.append(q[j])
    return solve_exact(rows, rhs)


def poly_eval(coeffs, x):
    x = Fraction(x)
    return sum(Fraction(c) * x**k for k, c in enumerate(coeffs))


def poly_derivs(coeffs, x, count):
    """Derivative values ``P^(k)(x)`` for k < count, exactly."""
    out = []
    c = [Fraction(v) for v in coeffs]
    for _ in range(count):
        out.append(poly_eval(c, x))
        c = [k * c[k] for k in range(1, len(c))] or [Fraction(0)]
    return out


def poly_integral(coeffs, lo=0, hi=1):
    lo, hi = Fraction(lo), Fraction(hi)
    return sum(Fraction(c) * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))


def first_half_sum(m, n, s, w):
    """Left double sum of the blend formula, term by term."""
    s = Fraction(s)
    return sum(
        comb(n + k, k) * s ** (k + j) * (1 - s) ** (n + 1) * Fraction(w[j])
        for j in range(m + 1)
        for k in range(m - j + 1)
    )


def step_blend_exact(m, n, i, D):
    """Exact value of the (m, n) step blend at s = i/D, via integer arithmetic.

    H = -(1-s)^(n+1) sum_k C(n+k,k) s^k + s^(m+1) sum_k C(m+k,k) (1-s)^k,
    everything multiplied through by D^(m+n+1).
    """
    j = D - i
    left = sum(comb(n + k, k) * i**k * D ** (m - k) for k in range(m + 1))
    right = sum(comb(m + k, k) * j**k * D ** (n - k) for k in range(n + 1))
    return Fraction(-(j ** (n + 1)) * left + i ** (m + 1) * right, D ** (m + n + 1))
