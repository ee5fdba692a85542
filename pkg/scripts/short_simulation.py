"""Why a short simulation cannot estimate t(154).

Runs increasingly long seeded simulations and prints how many hands
reached 154 rolls next to the expected count trials * t(154).
"""

import argparse

from handlength import compile_chain, craps, estimate_tail, tail_matrix_power

parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
parser.add_argument("--max-trials", type=int, default=10**7)
parser.add_argument("--seed", type=int, default=2009)
args = parser.parse_args()

t154 = tail_matrix_power(compile_chain(craps()), 154)
trials = 10**4
while trials <= args.max_trials:
    r = estimate_tail(craps(), trials, args.seed)
    print(f"{trials:>12,d} hands: longest {r.max_length_observed:4d} rolls, "
          f"hands >= 154: {r.tail_count(154)}, expected {float(trials * t154):.2e}")
    trials *= 10
