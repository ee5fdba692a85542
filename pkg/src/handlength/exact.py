"""Exact tail probabilities t(n) = P(L >= n) of the hand length L.

Two independent routes are provided: the come-out recursion over point
groups and powers of the transient block Q. Both return
``fractions.Fraction`` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .game import ChainSpec


class UnboundedHandError(ArithmeticError):
    """The hand never ends with positive probability, so E[L] is infinite."""


@dataclass(frozen=True)
class TailTable:
    game: ChainSpec
    values: tuple[tuple[int, Fraction], ...]

    @property
    def max_n(self) -> int:
        return self.values[-1][0] if self.values else 0

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n - 1][1]

    def as_list(self) -> list[Fraction]:
        return [t for _, t in self.values]


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def recursion_table(game: ChainSpec, n_max: int) -> list[Fraction]:
    """t(1..n_max) by conditioning on the first come-out roll.

    For n >= 3,

        t(n) = P(no point) t(n-1)
               + sum_g mass_g stay_g^(n-2)
               + sum_g mass_g make_g sum_{l=2}^{n-1} stay_g^(l-2) t(n-l)

    where group g has come-out mass ``mass_g``, per-roll make probability
    ``make_g`` and per-roll probability ``stay_g`` that the point stays
    unresolved. The inner sum is carried as a running total so each new
    term costs O(#groups).
    """
    _check_n(n_max)
    P = game.P
    groups = [(P[0][i], P[i][0], P[i][i]) for i in range(1, game.size)]
    no_point = P[0][0]
    t = [Fraction(1), Fraction(1)][:n_max]
    stay_pow = [Fraction(1)] * len(groups)  # stay_g^(n-2)
    inner = [Fraction(0)] * len(groups)  # sum_{l=2}^{n-1} stay_g^(l-2) t(n-l)
    for n in range(3, n_max + 1):
        total = no_point * t[n - 2]
        for g, (mass, make, stay) in enumerate(groups):
            stay_pow[g] *= stay
            inner[g] = t[n - 3] + stay * inner[g]
            total += mass * (stay_pow[g] + make * inner[g])
        t.append(total)
    return t


def tail_recursion(game: ChainSpec, n: int) -> Fraction:
    _check_n(n)
    return recursion_table(game, n)[n - 1]


def _scaled_q(game: ChainSpec) -> tuple[list[list[int]], int]:
    """Integer matrix M and denominator d with Q = M / d."""
    Q = game.Q
    d = math.lcm(*(x.denominator for row in Q for x in row))
    return [[int(x * d) for x in row] for row in Q], d


def _matmul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def tail_matrix_power(game: ChainSpec, n: int) -> Fraction:
    """t(n) as the first row sum of Q^(n-1), by repeated squaring."""
    _check_n(n)
    M, d = _scaled_q(game)
    k = len(M)
    result = [[int(i == j) for j in range(k)] for i in range(k)]
    base, e = M, n - 1
    while e:
        if e & 1:
            result = _matmul(result, base)
        e >>= 1
        if e:
            base = _matmul(base, base)
    return Fraction(sum(result[0]), d ** (n - 1))


def matrix_power_table(game: ChainSpec, n_max: int) -> list[Fraction]:
    """t(1..n_max) from successive products of the first row of Q."""
    _check_n(n_max)
    M, d = _scaled_q(game)
    k = len(M)
    row = [int(j == 0) for j in range(k)]
    out = []
    for n in range(1, n_max + 1):
        out.append(Fraction(sum(row), d ** (n - 1)))
        row = [sum(row[i] * M[i][j] for i in range(k)) for j in range(k)]
    return out


def tail_table(game: ChainSpec, n_max: int, method: str = "matrix") -> TailTable:
    if method == "matrix":
        values = matrix_power_table(game, n_max)
    elif method == "recursion":
        values = recursion_table(game, n_max)
    else:
        raise ValueError(f"unknown method {method!r}")
    return TailTable(game, tuple(enumerate(values, start=1)))


def pmf(game: ChainSpec, n: int) -> Fraction:
    """P(L = n) = t(n) - t(n+1)."""
    _check_n(n)
    t = matrix_power_table(game, n + 1)
    return t[n - 1] - t[n]


def _solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals."""
    k = len(A)
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for c in range(k):
        pivot = next((r for r in range(c, k) if aug[r][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[-1] for row in aug]


def mean_length(game: ChainSpec) -> Fraction:
    """E[L], the first row sum of the fundamental matrix (I - Q)^-1."""
    Q = game.Q
    k = len(Q)
    I_minus_Q = [[int(i == j) - Q[i][j] for j in range(k)] for i in range(k)]
    try:
        x = _solve(I_minus_Q, [Fraction(1)] * k)
    except ZeroDivisionError:
        raise UnboundedHandError(f"{game.name}: I - Q is singular, E[L] is infinite") from None
    return x[0]
