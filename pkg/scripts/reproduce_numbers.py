"""Print the headline numbers: t(154) for both games, the eigen table, thresholds."""

from handlength import compile_chain, crapless, craps, leading_term_bound, mixture, tail_matrix_power
from handlength.polynomial import mp
from handlength.report import format_decimal
from handlength.spectral import ratio_thresholds

for spec in (craps(), crapless()):
    chain = compile_chain(spec)
    t = tail_matrix_power(chain, 154)
    m = mixture(chain)
    print(f"{spec.name}: t(154) = {format_decimal(t, 9)}  (one chance in {format_decimal(1 / t, 3)})")
    for i, (c, e) in enumerate(m.terms, start=1):
        print(f"  e{i} = {format_decimal(e, 18, places=True):>22}   "
              f"c{i} = {format_decimal(c, 18, places=True):>22}")
    first = ratio_thresholds(m)
    print("  first n with c1 e1^(n-1) / t(n) < 1 + 10^-m: "
          + ", ".join(f"m={k}: {v}" for k, v in first.items()))
    for n in (14, 15, 19):
        print(f"    ratio - 1 at n = {n}: {mp.nstr(leading_term_bound(m, n)[1] - 1, 6)}")
