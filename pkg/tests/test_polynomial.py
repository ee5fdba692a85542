from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from handlength.polynomial import (
    CertificationError,
    arrowhead_charpoly,
    certified_roots,
    charpoly,
    faddeev_leverrier,
    is_arrowhead,
    mp,
    poly_eval,
    to_integer_poly,
)

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=40)


def sympy_charpoly(M):
    """det(M - zI) via sympy, highest degree first."""
    z = sympy.Symbol("z")
    A = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M])
    det = (A - z * sympy.eye(len(M))).det()
    return [F(int(c.p), int(c.q)) for c in sympy.Poly(det, z).all_coeffs()]


@st.composite
def arrowheads(draw):
    k = draw(st.integers(1, 6))
    M = [[F(0)] * k for _ in range(k)]
    for i in range(k):
        M[i][i] = draw(fractions)
        M[0][i] = draw(fractions)
        M[i][0] = draw(fractions)
    return M


@settings(max_examples=50, deadline=None)
@given(arrowheads())
def test_arrowhead_charpoly_against_sympy(M):
    assert is_arrowhead(M)
    assert arrowhead_charpoly(M) == sympy_charpoly(M)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda k: st.lists(st.lists(fractions, min_size=k, max_size=k), min_size=k, max_size=k)))
def test_faddeev_leverrier_against_sympy(M):
    assert faddeev_leverrier(M) == sympy_charpoly(M)
    assert charpoly(M) == sympy_charpoly(M)


def test_not_arrowhead():
    M = [[F(1), F(0), F(0)], [F(0), F(1), F(1)], [F(0), F(0), F(1)]]
    assert not is_arrowhead(M)
    with pytest.raises(ValueError):
        arrowhead_charpoly(M)


def test_to_integer_poly():
    assert to_integer_poly([F(-1, 2), F(1, 3), F(0)]) == (3, -2, 0)
    assert to_integer_poly([F(0), F(2), F(4)]) == (1, 2)


def test_certified_roots_of_known_cubic():
    # (z - 1/2)(z - 1/3)(z - 1/7)
    p = [F(1), F(-41, 42), F(2, 7), F(-1, 42)]
    roots = certified_roots(p, [F(1), F(2, 5), F(1, 5), F(0)])
    for r, expected in zip(roots, (mp.mpf(1) / 2, mp.mpf(1) / 3, mp.mpf(1) / 7)):
        assert abs(r - expected) < mp.mpf("1e-50")


def test_certified_roots_irrational():
    roots = certified_roots([F(1), F(0), F(-2)], [F(2), F(0), F(-2)])
    assert abs(roots[0] - mp.sqrt(2)) < mp.mpf("1e-50")
    assert abs(roots[1] + mp.sqrt(2)) < mp.mpf("1e-50")
    assert all(abs(poly_eval([1, 0, -2], r)) < mp.mpf("1e-40") for r in roots)


def test_certified_roots_requires_alternation():
    with pytest.raises(CertificationError, match="alternation"):
        certified_roots([F(1), F(0), F(-2)], [F(3), F(2), F(-2)])


def test_certified_roots_bracket_count():
    with pytest.raises(CertificationError):
        certified_roots([F(1), F(0), F(-2)], [F(2), F(-2)])
    with pytest.raises(ValueError):
        certified_roots([F(1), F(0), F(-2)], [F(-2), F(0), F(2)])


def test_double_root_rejected():
    # (z - 1/2)^2 (z - 1/10) has no sign change at 1/2, so it cannot certify
    p = [F(1), F(-11, 10), F(7, 20), F(-1, 40)]
    with pytest.raises(CertificationError):
        certified_roots(p, [F(1), F(1, 2), F(1, 5), F(0)])


def test_near_multiple_roots_rejected():
    a, b = F(1, 2), F(1, 2) + F(1, 10**25)
    p = [F(1), -(a + b), a * b]
    with pytest.raises(CertificationError, match="near-multiple"):
        certified_roots(p, [F(1), (a + b) / 2, F(0)])
