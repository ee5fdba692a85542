"""Exact polynomials, characteristic polynomials, and certified real roots.

Polynomials are sequences of coefficients, highest degree first.
High-precision arithmetic goes through the private mpmath context ``mp``
so the global ``mpmath.mp`` precision is never touched.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import mpmath

WORKING_DPS = 60
mp = mpmath.MPContext()
mp.dps = WORKING_DPS

BISECTION_WIDTH = Fraction(1, 10**20)
RESIDUAL_TOL = mp.mpf("1e-40")
MIN_ROOT_GAP = mp.mpf("1e-20")

Poly = list


class CertificationError(ArithmeticError):
    """A root could not be bracketed or certified to the required tolerance."""


def to_mpf(x):
    """Exact rational (or int) to a working-precision float."""
    x = Fraction(x)
    return mp.mpf(x.numerator) / x.denominator


def poly_mul(p: Sequence, q: Sequence) -> Poly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    p = [Fraction(0)] * (n - len(p)) + list(p)
    q = [Fraction(0)] * (n - len(q)) + list(q)
    return [a + b for a, b in zip(p, q)]


def poly_scale(p: Sequence, c) -> Poly:
    return [c * a for a in p]


def poly_eval(p: Sequence, x):
    """Horner evaluation; exact for Fraction input, mp precision for mpf."""
    acc = 0
    for a in p:
        acc = acc * x + a
    return acc


def poly_derivative(p: Sequence) -> Poly:
    n = len(p) - 1
    return [a * (n - i) for i, a in enumerate(p[:-1])]


def to_integer_poly(p: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale to coprime integer coefficients with a positive leading term."""
    p = [Fraction(a) for a in p]
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    d = math.lcm(*(a.denominator for a in p))
    ints = [int(a * d) for a in p]
    g = math.gcd(*ints) or 1
    if ints[0] < 0:
        g = -g
    return tuple(a // g for a in ints)


def is_arrowhead(M: Sequence[Sequence]) -> bool:
    """Nonzero entries only on the diagonal, first row and first column."""
    return all(M[i][j] == 0 for i in range(1, len(M)) for j in range(1, len(M)) if i != j)


def arrowhead_charpoly(M: Sequence[Sequence[Fraction]]) -> Poly:
    """det(M - zI) for an arrowhead matrix.

    Eliminating the first-row entries with the diagonal rows below leaves
    a triangular matrix, so with a = M[0][0], b_i = M[0][i], c_i = M[i][0]
    and d_i = M[i][i]:

        det = (a - z) prod_i (d_i - z) - sum_i b_i c_i prod_{k != i} (d_k - z)
    """
    if not is_arrowhead(M):
        raise ValueError("matrix is not arrowhead-structured")
    k = len(M)
    lin = [[Fraction(-1), Fraction(M[i][i])] for i in range(k)]
    out = [Fraction(1)]
    for f in lin:
        out = poly_mul(out, f)
    for i in range(1, k):
        bc = Fraction(M[0][i]) * Fraction(M[i][0])
        if bc == 0:
            continue
        prod = [Fraction(1)]
        for j in range(1, k):
            if j != i:
                prod = poly_mul(prod, lin[j])
        out = poly_add(out, poly_scale(prod, -bc))
    return out


def faddeev_leverrier(M: Sequence[Sequence[Fraction]]) -> Poly:
    """det(M - zI) for any square matrix, in exact arithmetic."""
    k = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(1)]  # det(zI - M), highest degree first
    N = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for m in range(1, k + 1):
        AN = [[sum(A[i][l] * N[l][j] for l in range(k)) for j in range(k)] for i in range(k)]
        c = -sum(AN[i][i] for i in range(k)) / m
        coeffs.append(c)
        N = [[AN[i][j] + (c if i == j else 0) for j in range(k)] for i in range(k)]
    sign = -1 if k % 2 else 1
    return [sign * c for c in coeffs]


def charpoly(M: Sequence[Sequence[Fraction]]) -> Poly:
    """det(M - zI); arrowhead matrices take the row-operation shortcut."""
    if is_arrowhead(M):
        return arrowhead_charpoly(M)
    return faddeev_leverrier(M)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_sequence(p: Sequence, points: Sequence[Fraction]) -> list[int]:
    return [_sign(poly_eval(p, Fraction(x))) for x in points]


def alternates(signs: Sequence[int]) -> bool:
    return all(s != 0 for s in signs) and all(a == -b for a, b in zip(signs, signs[1:]))


def _bisect(p: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    s_lo = _sign(poly_eval(p, lo))
    while hi - lo > BISECTION_WIDTH:
        mid = (lo + hi) / 2
        s = _sign(poly_eval(p, mid))
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _newton(p, dp, x0, lo, hi):
    x = x0
    eps = mp.mpf(10) ** (-(WORKING_DPS - 5))
    for _ in range(100):
        step = poly_eval(p, x) / poly_eval(dp, x)
        x -= step
        if not lo <= x <= hi:
            raise CertificationError(f"Newton left the bracket [{lo}, {hi}]")
        if abs(step) < eps:
            return x
    raise CertificationError("Newton refinement did not converge")


def certified_roots(poly: Sequence, brackets: Sequence[Fraction]) -> list:
    """Real roots of ``poly``, one inside each consecutive bracket pair.

    ``brackets`` is a strictly decreasing list of rationals at which the
    polynomial must alternate in sign, so each open interval holds an odd
    number of roots; with len(brackets) - 1 == degree it holds exactly one.
    Each root is bisected in exact arithmetic to width 1e-20, polished by
    Newton's method in ``mp``, and accepted only if the monic residual is
    below 1e-40. Roots are returned in descending order as ``mp.mpf``.
    """
    brackets = [Fraction(b) for b in brackets]
    p = [Fraction(a) for a in poly]
    if any(a <= b for a, b in zip(brackets, brackets[1:])):
        raise ValueError("brackets must be strictly decreasing")
    if len(brackets) - 1 != len(p) - 1:
        raise CertificationError(
            f"{len(brackets) - 1} brackets for a degree {len(p) - 1} polynomial")
    signs = sign_sequence(p, brackets)
    if not alternates(signs):
        raise CertificationError(f"no sign alternation at bracket points: {signs}")
    lead = to_mpf(p[0])
    mp_p = [to_mpf(a) / lead for a in p]
    mp_dp = poly_derivative(mp_p)
    roots = []
    for hi, lo in zip(brackets, brackets[1:]):
        a, b = _bisect(p, lo, hi)
        if a == b:
            roots.append(to_mpf(a))
            continue
        x = _newton(mp_p, mp_dp, to_mpf((a + b) / 2), to_mpf(a), to_mpf(b))
        if abs(poly_eval(mp_p, x)) >= RESIDUAL_TOL:
            raise CertificationError(f"residual too large at root {x}")
        roots.append(x)
    for x, y in zip(roots, roots[1:]):
        if x - y < MIN_ROOT_GAP:
            raise CertificationError(f"near-multiple roots {x} and {y}")
    return roots
