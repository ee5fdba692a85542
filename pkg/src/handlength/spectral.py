"""Eigenvalues of Q, geometric-mixture coefficients and the closed-form tail.

All real-valued results are ``mpf`` numbers of the private 60-digit
context :data:`handlength.polynomial.mp`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .analysis import interlacing_brackets
from .exact import matrix_power_table, tail_matrix_power
from .game import ChainSpec, compile_chain, craps, is_standard_craps
from .polynomial import (
    MIN_ROOT_GAP,
    CertificationError,
    certified_roots,
    charpoly,
    mp,
    poly_eval,
    to_integer_poly,
    to_mpf,
)

RADICAL = "radical-closed-form"
NUMERIC = "numeric-roots"

AGREEMENT_TOL = mp.mpf("1e-40")
EIGENVECTOR_TOL = mp.mpf("1e-30")


class MixtureError(ArithmeticError):
    """Mixture coefficients cannot be computed reliably."""


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    method: str
    charpoly: tuple[int, ...]

    def __post_init__(self):
        eig = self.eigenvalues
        if not all(0 < e < 1 for e in eig):
            raise CertificationError("eigenvalues must lie in (0, 1)")
        if any(a <= b for a, b in zip(eig, eig[1:])):
            raise CertificationError("eigenvalues must be distinct and descending")

    def residuals(self) -> list:
        """|charpoly(e)| / leading coefficient for each eigenvalue."""
        lead = self.charpoly[0]
        return [abs(poly_eval(self.charpoly, e)) / lead for e in self.eigenvalues]


@dataclass(frozen=True)
class GeometricMixture:
    """t(n) = sum_i c_i e_i^(n-1), terms sorted by decreasing rate e_i."""

    terms: tuple[tuple, ...]
    chain: Optional[ChainSpec] = field(default=None, compare=False)

    @property
    def coefficients(self) -> list:
        return [c for c, _ in self.terms]

    @property
    def rates(self) -> list:
        return [e for _, e in self.terms]

    def __len__(self):
        return len(self.terms)


def characteristic_polynomial(game: ChainSpec) -> tuple[int, ...]:
    """det(Q - zI) scaled to coprime integers with positive leading term."""
    return to_integer_poly(charpoly(game.Q))


def radical_alpha():
    """The real cube-root combination shared by all four craps roots."""
    s = mp.sqrt(9829)
    return 2 * s * mp.cos(mp.acos(mp.mpf(-710369) / (9829 * s)) / 3)


def radical_root(u: int, v: int, alpha=None):
    if alpha is None:
        alpha = radical_alpha()
    inner = (698 - alpha) / 3 - 2136 * u * mp.sqrt(3 / (349 + alpha))
    return (mp.mpf(5) / 8 + mp.mpf(u) / 72 * mp.sqrt((349 + alpha) / 3)
            + mp.mpf(v) / 72 * mp.sqrt(inner))


def eigenvalues_radical(game: Optional[ChainSpec] = None) -> Spectrum:
    """Craps eigenvalues from the quartic's radical solution.

    The cube roots of the complex resolvent are taken in trigonometric
    form, which only needs real arithmetic. The result is cross-checked
    against the certified numeric roots.
    """
    game = game or compile_chain(craps())
    if not is_standard_craps(game):
        raise ValueError("the radical form is only available for standard craps")
    alpha = radical_alpha()
    if not alpha > 0:
        raise CertificationError(f"alpha = {alpha} is not positive")
    eig = tuple(radical_root(u, v, alpha) for u, v in ((1, 1), (1, -1), (-1, 1), (-1, -1)))
    spectrum = Spectrum(eig, RADICAL, characteristic_polynomial(game))
    numeric = eigenvalues_numeric(game)
    for a, b in zip(spectrum.eigenvalues, numeric.eigenvalues):
        if abs(a - b) > AGREEMENT_TOL:
            raise CertificationError(f"radical root {a} disagrees with numeric root {b}")
    return spectrum


def eigenvalues_numeric(game: ChainSpec) -> Spectrum:
    q = charpoly(game.Q)
    roots = certified_roots(q, interlacing_brackets(game))
    return Spectrum(tuple(roots), NUMERIC, to_integer_poly(q))


def eigenvalues(game: ChainSpec) -> Spectrum:
    """Radical path for standard craps, numeric roots for everything else."""
    if is_standard_craps(game):
        return eigenvalues_radical(game)
    return eigenvalues_numeric(game)


def craps_coefficient(w, x, y, z):
    """Closed-form mixture coefficient for rate w given the other three rates."""
    num = (36 * w - 25) * (4835 - 5580 * (x + y + z)
                           + 6480 * (x * y + x * z + y * z) - 7776 * x * y * z)
    return num / (38880 * (w - x) * (w - y) * (w - z))


def craps_coefficients(rates) -> list:
    e = list(rates)
    return [craps_coefficient(*(e[(i + k) % 4] for k in range(4))) for i in range(4)]


def mixture_coefficients(game: ChainSpec, spectrum: Spectrum) -> GeometricMixture:
    """Match sum_i c_i e_i^(k-1) to the exact t(k) for k = 1..m.

    For standard craps the Vandermonde solution must also agree with the
    closed-form coefficient function.
    """
    e = list(spectrum.eigenvalues)
    m = len(e)
    gaps = [a - b for a, b in zip(e, e[1:])]
    if gaps and min(gaps) < MIN_ROOT_GAP:
        raise MixtureError(f"eigenvalue separation {min(gaps)} is too small")
    t = matrix_power_table(game, m)
    V = mp.matrix([[ei ** k for ei in e] for k in range(m)])
    rhs = mp.matrix([to_mpf(x) for x in t])
    c = list(mp.lu_solve(V, rhs))
    if is_standard_craps(game):
        closed = craps_coefficients(e)
        for a, b in zip(c, closed):
            if abs(a - b) > AGREEMENT_TOL:
                raise MixtureError(f"Vandermonde coefficient {a} disagrees with closed form {b}")
    return GeometricMixture(tuple(zip(c, e)), chain=game)


def mixture(game: ChainSpec) -> GeometricMixture:
    return mixture_coefficients(game, eigenvalues(game))


def eigenvector(game: ChainSpec, eigenvalue) -> list:
    """Right eigenvector of the craps P for the given eigenvalue.

    The unit eigenvalue gets the all-ones vector; any other eigenvalue e
    gets the polynomial vector evaluated at x = 36 e, whose fourth
    component is normalized to 1.
    """
    if not is_standard_craps(game):
        raise ValueError("the eigenvector polynomials are specific to standard craps")
    e = mp.mpf(eigenvalue)
    if e == 1:
        r = [mp.mpf(1)] * 5
    else:
        x = 36 * e
        f = mp.mpf
        r = [
            -5 + x / 5,
            -175 + f(581) / 15 * x - f(21) / 10 * x**2 + x**3 / 30,
            f(275) / 2 - f(1199) / 40 * x + f(8) / 5 * x**2 - x**3 / 40,
            f(1),
            f(0),
        ]
    residual = max(abs(sum(to_mpf(p) * ri for p, ri in zip(row, r)) - e * r_i)
                   for row, r_i in zip(game.P, r))
    if residual > EIGENVECTOR_TOL:
        raise CertificationError(f"|P r - e r| = {residual} for eigenvalue {e}")
    return r


def tail_closed_form(mixture: GeometricMixture, n: int):
    if n < 1:
        raise ValueError("n must be positive")
    return mp.fsum(c * e ** (n - 1) for c, e in mixture.terms)


def leading_term_bound(mixture: GeometricMixture, n: int, exact: Optional[Fraction] = None):
    """(c_1 e_1^(n-1), c_1 e_1^(n-1) / t(n)) with t(n) exact."""
    if exact is None:
        if mixture.chain is None:
            raise ValueError("mixture has no chain attached; pass the exact t(n)")
        exact = tail_matrix_power(mixture.chain, n)
    c1, e1 = mixture.terms[0]
    bound = c1 * e1 ** (n - 1)
    return bound, bound / to_mpf(exact)


def ratio_thresholds(mixture: GeometricMixture, orders=(3, 6, 9, 12), n_max: int = 500) -> dict:
    """Smallest n with c_1 e_1^(n-1) / t(n) < 1 + 10^-m, for each m.

    The ratio is nonincreasing along the scanned range (it is checked), so
    the first crossing is a threshold for all larger n in range.
    """
    exact = matrix_power_table(mixture.chain, n_max)
    ratios = [leading_term_bound(mixture, n, exact[n - 1])[1] for n in range(1, n_max + 1)]
    if any(b > a for a, b in zip(ratios, ratios[1:])):
        raise CertificationError("bound ratio is not monotone over the scanned range")
    out = {}
    for m in orders:
        limit = 1 + mp.mpf(10) ** (-m)
        out[m] = next((n for n, r in enumerate(ratios, start=1) if r < limit), None)
    return out
