"""Computational certificates for the structure of the transient block Q.

For an arrowhead matrix the characteristic polynomial alternates in sign
at 1 (or any upper bound), at the distinct diagonal entries below the
corner, and at 0 (or any lower bound). That pins exactly one eigenvalue
between consecutive diagonal entries, which is what every check here
reduces to. The corner entry Q[0][0] takes no part in the brackets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from .game import ChainSpec
from .polynomial import (
    CertificationError,
    alternates,
    certified_roots,
    charpoly,
    is_arrowhead,
    sign_sequence,
    to_mpf,
)

if TYPE_CHECKING:
    from .spectral import Spectrum


@dataclass
class StructureReport:
    is_arrowhead: bool
    diagonal_brackets: list[Fraction]
    sign_sequence: list[int]
    symmetric_part_eigenvalues: list = field(default_factory=list)
    verdicts: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def diagonal_brackets(M) -> list[Fraction]:
    """Diagonal entries of M except the corner, distinct, descending."""
    return sorted({Fraction(M[i][i]) for i in range(1, len(M))}, reverse=True)


def interlacing_brackets(game: ChainSpec) -> list[Fraction]:
    """[1, d_1, ..., d_k, 0] for the point-state diagonal of Q."""
    return [Fraction(1)] + diagonal_brackets(game.Q) + [Fraction(0)]


def verify_interlacing(game: ChainSpec, spectrum: Optional["Spectrum"] = None) -> StructureReport:
    Q = game.Q
    arrow = is_arrowhead(Q)
    diag = diagonal_brackets(Q)
    points = [Fraction(1)] + diag + [Fraction(0)]
    q = charpoly(Q)
    signs = sign_sequence(q, points)
    report = StructureReport(arrow, diag, signs)
    report.verdicts["arrowhead"] = arrow
    report.verdicts["distinct point diagonal"] = len(diag) == len(Q) - 1
    report.verdicts["sign alternation"] = alternates(signs)
    if not report.verdicts["sign alternation"]:
        report.failures.append(f"charpoly signs at {[str(x) for x in points]}: {signs}")
    if spectrum is not None:
        eig = list(spectrum.eigenvalues)
        inside = len(eig) == len(points) - 1
        for i, e in enumerate(eig[: len(points) - 1]):
            hi, lo = points[i], points[i + 1]
            if not to_mpf(lo) < e < to_mpf(hi):
                inside = False
                report.failures.append(f"e{i + 1} = {e} outside ({lo}, {hi})")
        if len(eig) != len(points) - 1:
            report.failures.append(f"{len(eig)} eigenvalues for {len(points) - 1} brackets")
        report.verdicts["eigenvalues inside brackets"] = inside
    return report


def symmetric_part(Q) -> list[list[Fraction]]:
    k = len(Q)
    return [[(Fraction(Q[i][j]) + Fraction(Q[j][i])) / 2 for j in range(k)] for i in range(k)]


def verify_positive_definite(game: ChainSpec) -> StructureReport:
    """Certify that the symmetric part A = (Q + Q^T)/2 has positive spectrum.

    A is again arrowhead, so its eigenvalues are bracketed by its own
    diagonal entries (corner excluded) and a Gershgorin bound. Positivity
    follows exactly from the sign of det(A - zI) at 0 against the sign at
    the lower Gershgorin bound.
    """
    A = symmetric_part(game.Q)
    k = len(A)
    symmetric = all(A[i][j] == A[j][i] for i in range(k) for j in range(k))
    diag = diagonal_brackets(A)
    radius = max(sum(abs(x) for x in row) for row in A) + 1
    points = [radius] + diag + [-radius]
    q = charpoly(A)
    signs = sign_sequence(q, points)
    report = StructureReport(is_arrowhead(A), diag, signs)
    report.verdicts["symmetric part exact"] = symmetric
    report.verdicts["sign alternation"] = alternates(signs)
    # The lowest eigenvalue sits in (-radius, d_min); it is positive iff
    # no sign change happens on (-radius, 0].
    at_zero = sign_sequence(q, [Fraction(0)])[0]
    positive = at_zero != 0 and at_zero == signs[-1]
    try:
        eig = certified_roots(q, points)
        report.symmetric_part_eigenvalues = eig
        report.verdicts["eigenvalues positive"] = positive and all(e > 0 for e in eig)
        report.verdicts["interlaces diagonal"] = all(
            to_mpf(lo) < e < to_mpf(hi) for e, hi, lo in zip(eig, points, points[1:]))
    except CertificationError as exc:
        report.failures.append(str(exc))
        report.verdicts["eigenvalues positive"] = False
        report.verdicts["interlaces diagonal"] = False
    return report
