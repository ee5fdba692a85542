from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from handlength.exact import matrix_power_table
from handlength.game import compile_chain, craps
from handlength.polynomial import CertificationError, mp, poly_eval, to_mpf
from handlength.spectral import (
    NUMERIC,
    RADICAL,
    MixtureError,
    Spectrum,
    characteristic_polynomial,
    craps_coefficients,
    eigenvalues,
    eigenvalues_numeric,
    eigenvalues_radical,
    eigenvector,
    leading_term_bound,
    mixture,
    mixture_coefficients,
    radical_alpha,
    ratio_thresholds,
    tail_closed_form,
)

from .strategies import point_games

QUARTIC = (23328, -58320, 51534, -18321, 1975)
SEXTIC = (15116544, -59206464, 93137040, -73915740, 30008394, -5305446, 172975)

PAPER_E = ["0.862473751659322030", "0.741708271459795977",
           "0.709206775794379015", "0.186611201086502979"]
PAPER_C = ["1.211844812464518572", "-0.006375542263784777",
           "-0.004042671248651503", "-0.201426598952082292"]


def _fixed(x, places):
    """Fixed-point string rounded to ``places`` decimals, independent of report.py."""
    q = mp.nint(x * mp.mpf(10) ** places)
    sign = "-" if q < 0 else ""
    digits = str(int(abs(q))).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def test_charpolys(craps_chain, crapless_chain):
    assert characteristic_polynomial(craps_chain) == QUARTIC
    assert characteristic_polynomial(crapless_chain) == SEXTIC


def test_quartic_matches_printed_expansion():
    # 36^4 q(z) written out from the eliminated (1,1) entry
    z = F(3, 7)
    w = lambda a: a - 36 * z  # noqa: E731
    printed = (w(12) * w(27) * w(26) * w(25) - 18 * w(26) * w(25)
               - 32 * w(27) * w(25) - 50 * w(27) * w(26)) / F(36) ** 4
    assert printed * 36**4 / 72 == poly_eval(QUARTIC, z)


def test_sign_alternation_at_brackets():
    points = [F(1), F(27, 36), F(26, 36), F(25, 36), F(0)]
    signs = [poly_eval(QUARTIC, p) > 0 for p in points]
    assert signs == [True, False, True, False, True]


def test_alpha_positive_and_trig_form():
    alpha = radical_alpha()
    assert alpha > 0
    # alpha is the real value of zeta^(1/3) + 9829 / zeta^(1/3), principal branch
    zeta = mp.mpc(-710369, 18 * mp.sqrt(1373296647))
    cube = zeta ** (mp.mpf(1) / 3)
    complex_alpha = cube + 9829 / cube
    assert abs(complex_alpha.imag) < mp.mpf("1e-50")
    assert abs(complex_alpha.real - alpha) < mp.mpf("1e-50")


def test_radical_eigenvalues_match_table(craps_chain):
    s = eigenvalues_radical(craps_chain)
    assert s.method == RADICAL
    assert [_fixed(e, 18) for e in s.eigenvalues] == PAPER_E
    assert all(r < mp.mpf("1e-40") for r in s.residuals())


def test_numeric_matches_radical(craps_chain):
    r = eigenvalues_radical(craps_chain)
    n = eigenvalues_numeric(craps_chain)
    assert n.method == NUMERIC
    assert all(abs(a - b) < mp.mpf("1e-40") for a, b in zip(r.eigenvalues, n.eigenvalues))


def test_craps_interlacing(craps_chain):
    e = eigenvalues(craps_chain).eigenvalues
    assert 1 > e[0] > mp.mpf(27) / 36 > e[1] > mp.mpf(26) / 36 > e[2] > mp.mpf(25) / 36 > e[3] > 0


def test_crapless_spectrum(crapless_chain):
    s = eigenvalues(crapless_chain)
    assert s.method == NUMERIC
    assert len(s.eigenvalues) == 6
    bounds = [1] + [mp.mpf(d) / 36 for d in (29, 28, 27, 26, 25)] + [0]
    for e, hi, lo in zip(s.eigenvalues, bounds, bounds[1:]):
        assert lo < e < hi
    assert all(r < mp.mpf("1e-40") for r in s.residuals())


def test_radical_rejects_other_games(crapless_chain):
    with pytest.raises(ValueError):
        eigenvalues_radical(crapless_chain)


def test_spectrum_validation():
    with pytest.raises(CertificationError):
        Spectrum((mp.mpf("0.5"), mp.mpf("1.2")), NUMERIC, (1,))
    with pytest.raises(CertificationError):
        Spectrum((mp.mpf("0.3"), mp.mpf("0.5")), NUMERIC, (1,))


def test_coefficients_match_table(craps_chain):
    m = mixture(craps_chain)
    assert [_fixed(c, 18) for c in m.coefficients] == PAPER_C


def test_closed_form_coefficients_agree(craps_chain):
    m = mixture(craps_chain)
    for a, b in zip(m.coefficients, craps_coefficients(m.rates)):
        assert abs(a - b) < mp.mpf("1e-45")


@pytest.mark.parametrize("which", ["craps_chain", "crapless_chain"])
def test_identities_and_signs(which, request):
    m = mixture(request.getfixturevalue(which))
    assert abs(mp.fsum(m.coefficients) - 1) < mp.mpf("1e-30")
    assert abs(mp.fsum(c * e for c, e in m.terms) - 1) < mp.mpf("1e-30")
    c = m.coefficients
    assert c[0] > 0 and all(x < 0 for x in c[1:])


def test_mixture_rejects_close_eigenvalues(craps_chain):
    s = Spectrum((mp.mpf("0.8"), mp.mpf("0.8") - mp.mpf("1e-25"), mp.mpf("0.3"), mp.mpf("0.1")),
                 NUMERIC, (1,))
    with pytest.raises(MixtureError):
        mixture_coefficients(craps_chain, s)


@pytest.mark.parametrize("which", ["craps_chain", "crapless_chain"])
def test_closed_form_vs_exact(which, request):
    chain = request.getfixturevalue(which)
    m = mixture(chain)
    for n, t in enumerate(matrix_power_table(chain, 500), start=1):
        assert abs(tail_closed_form(m, n) / to_mpf(t) - 1) < mp.mpf("1e-12")


def test_closed_form_headline_values(craps_chain, crapless_chain):
    assert abs(tail_closed_form(mixture(craps_chain), 1) - 1) < mp.mpf("1e-30")
    assert mp.nstr(tail_closed_form(mixture(craps_chain), 154), 9) == "1.78882426e-10"
    assert mp.nstr(tail_closed_form(mixture(crapless_chain), 154), 9) == "2.96360068e-11"


@settings(max_examples=15, deadline=None)
@given(point_games(min_points=1))
def test_closed_form_random_games(spec):
    chain = compile_chain(spec)
    m = mixture(chain)
    assert len(m) == chain.size
    for n, t in enumerate(matrix_power_table(chain, 80), start=1):
        assert abs(tail_closed_form(m, n) / to_mpf(t) - 1) < mp.mpf("1e-30")


def test_eigenvectors(craps_chain):
    s = eigenvalues(craps_chain)
    assert eigenvector(craps_chain, 1) == [1] * 5
    for e in s.eigenvalues:
        r = eigenvector(craps_chain, e)
        assert r[3] == 1 and r[4] == 0
        Pr = [mp.fsum(to_mpf(p) * x for p, x in zip(row, r)) for row in craps_chain.P]
        assert max(abs(a - e * b) for a, b in zip(Pr, r)) < mp.mpf("1e-30")


def test_eigenvector_against_arrowhead_formula(craps_chain):
    # (Q - eI) v = 0 with v_0 = 1 forces v_i = Q[i][0] / (e - Q[i][i])
    Q = craps_chain.Q
    for e in eigenvalues(craps_chain).eigenvalues:
        r = eigenvector(craps_chain, e)
        v = [mp.mpf(1)] + [to_mpf(Q[i][0]) / (e - to_mpf(Q[i][i])) for i in range(1, 4)]
        scale = r[0] / v[0]
        assert all(abs(a - scale * b) < mp.mpf("1e-35") for a, b in zip(r[:4], v))


def test_eigenvector_rejects_non_eigenvalue(craps_chain):
    with pytest.raises(CertificationError):
        eigenvector(craps_chain, mp.mpf("0.5"))


def test_eigenvector_only_for_craps(crapless_chain):
    with pytest.raises(ValueError):
        eigenvector(crapless_chain, mp.mpf("0.5"))


def test_leading_term_bound(craps_chain):
    m = mixture(craps_chain)
    exact = matrix_power_table(craps_chain, 300)
    for n, t in enumerate(exact, start=1):
        bound, ratio = leading_term_bound(m, n, t)
        assert bound > to_mpf(t) and ratio > 1
    for n in (19, 25, 60):
        assert 1 < leading_term_bound(m, n)[1] < 1 + mp.mpf("1e-3")
    for n in (104, 120, 200):
        assert 1 < leading_term_bound(m, n)[1] < 1 + mp.mpf("1e-9")


def test_ratio_thresholds(craps_chain):
    first = ratio_thresholds(mixture(craps_chain))
    assert first[6] == 59 and first[9] == 104 and first[12] == 150
    # the printed n >= 19 for m = 3 is sufficient but not the first crossing
    assert first[3] == 15


def test_bound_needs_exact_source():
    m = mixture(compile_chain(craps()))
    bare = type(m)(m.terms)
    with pytest.raises(ValueError):
        leading_term_bound(bare, 5)
    assert leading_term_bound(bare, 3, F(8, 9))[1] > 1
