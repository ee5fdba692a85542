"""Decimal rendering and tail-table rows."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .exact import matrix_power_table
from .game import ChainSpec
from .polynomial import mp
from .spectral import GeometricMixture, leading_term_bound, mixture, tail_closed_form

SCI_LOW = Decimal("1e-4")
SCI_HIGH = Decimal("1e7")


def to_decimal(x, digits: int = 80) -> Decimal:
    """Decimal approximation of a Fraction, int, float or mpf."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        with localcontext() as ctx:
            ctx.prec = digits
            return Decimal(x.numerator) / Decimal(x.denominator)
    if isinstance(x, float):
        return Decimal(repr(x))
    return Decimal(mp.nstr(x, mp.dps, min_fixed=-mp.inf, max_fixed=mp.inf))


def format_decimal(x, digits: int, places: bool = False) -> str:
    """Round half-even to ``digits`` significant digits (or decimal places).

    Significant-digit output switches to scientific notation when
    |x| < 1e-4 or |x| >= 1e7; decimal-place output is always fixed.
    """
    d = to_decimal(x)
    if places:
        return str(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
    if d == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = +d
    if abs(d) < SCI_LOW or abs(d) >= SCI_HIGH:
        return f"{d:.{digits - 1}e}"
    return f"{d:.{max(digits - 1 - d.adjusted(), 0)}f}"


@dataclass(frozen=True)
class ReportRow:
    n: int
    t_exact: str
    t_closed_form: str
    leading_bound: str
    ratio: str
    one_in: str

    FIELDS = ("n", "t_exact", "t_closed_form", "leading_bound", "ratio", "one_in")

    def as_dict(self) -> dict:
        return asdict(self)


def tail_rows(game: ChainSpec, n_max: int, digits: int = 9,
              mix: GeometricMixture | None = None) -> list[ReportRow]:
    mix = mix or mixture(game)
    rows = []
    for n, t in enumerate(matrix_power_table(game, n_max), start=1):
        bound, ratio = leading_term_bound(mix, n, t)
        rows.append(ReportRow(
            n=n,
            t_exact=format_decimal(t, digits),
            t_closed_form=format_decimal(tail_closed_form(mix, n), digits),
            leading_bound=format_decimal(bound, digits),
            ratio=format_decimal(ratio, digits),
            one_in=format_decimal(1 / t, digits),
        ))
    return rows
