from decimal import Decimal
from fractions import Fraction as F

import pytest

from handlength.polynomial import mp
from handlength.report import ReportRow, format_decimal, tail_rows


@pytest.mark.parametrize("x, digits, expected", [
    (F(1, 8), 2, "0.12"),          # half-even: 0.125 -> 0.12
    (F(3, 8), 2, "0.38"),          # 0.375 -> 0.38
    (F(1), 9, "1.00000000"),
    (F(8, 9), 9, "0.888888889"),
    (F(1, 10**5), 3, "1.00e-5"),
    (F(12345678), 3, "1.23e+7"),
    (F(9999999), 3, "1.00e+7"),
    (F(-1, 3), 4, "-0.3333"),
    (0, 5, "0"),
])
def test_significant_digits(x, digits, expected):
    assert format_decimal(x, digits) == expected


def test_decimal_places():
    assert format_decimal(F(1, 3), 18, places=True) == "0.333333333333333333"
    assert format_decimal(F(-1, 300), 5, places=True) == "-0.00333"
    assert format_decimal(F(5, 2 * 10**6), 5, places=True) == "0.00000"  # half-even tie


def test_mpf_and_float_inputs():
    assert format_decimal(mp.mpf(1) / 3, 5) == "0.33333"
    assert format_decimal(0.5, 3) == "0.500"


def test_tail_rows(craps_chain):
    rows = tail_rows(craps_chain, 154)
    assert rows[0] == ReportRow(1, "1.00000000", "1.00000000", "1.21184481", "1.21184481", "1.00000000")
    last = rows[-1]
    assert last.t_exact == last.t_closed_form == "1.78882426e-10"
    assert last.one_in.startswith("5.59")
    assert Decimal(last.one_in) == Decimal("5.59026407e9")
    assert all(r.t_exact == r.t_closed_form for r in rows)
