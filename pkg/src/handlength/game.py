"""Dice distributions, point-game rules, and their absorbing Markov chains."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

OUTCOMES = tuple(range(2, 13))
SEVEN = 7


class GameSpecError(ValueError):
    """Raised for an invalid point-game rule description."""


@dataclass(frozen=True)
class DiceDistribution:
    probs: Mapping[int, Fraction]

    def __post_init__(self):
        probs = {int(k): Fraction(v) for k, v in dict(self.probs).items()}
        if any(p <= 0 for p in probs.values()):
            raise GameSpecError("dice probabilities must be strictly positive")
        if sum(probs.values()) != 1:
            raise GameSpecError("dice probabilities must sum to 1")
        object.__setattr__(self, "probs", dict(sorted(probs.items())))

    def __getitem__(self, outcome: int) -> Fraction:
        return self.probs[outcome]

    def __hash__(self):
        return hash(tuple(self.probs.items()))

    def mass(self, outcomes: Iterable[int]) -> Fraction:
        return sum((self.probs[j] for j in outcomes), Fraction(0))


def standard_dice() -> DiceDistribution:
    """Distribution of the sum of two fair dice."""
    return DiceDistribution({j: Fraction(6 - abs(j - 7), 36) for j in OUTCOMES})


@dataclass(frozen=True)
class PointGameSpec:
    """Come-out rules of a pass-line game played until a seven out.

    Every outcome of the dice must be exactly one of a natural, a craps
    number or a point, and 7 must be a natural.
    """

    naturals: frozenset[int]
    craps: frozenset[int]
    points: frozenset[int]
    dice: DiceDistribution = field(default_factory=standard_dice)
    seven_out: int = SEVEN
    name: str = "custom"

    def __post_init__(self):
        for attr in ("naturals", "craps", "points"):
            object.__setattr__(self, attr, frozenset(int(j) for j in getattr(self, attr)))
        validate(self)


def validate(spec: PointGameSpec) -> None:
    outcomes = set(spec.dice.probs)
    if spec.seven_out != SEVEN:
        raise GameSpecError("the seven-out outcome must be 7")
    if SEVEN in spec.points:
        raise GameSpecError("7 cannot be a point")
    if SEVEN not in spec.naturals:
        raise GameSpecError("7 must be a natural")
    pairs = [("naturals", "craps"), ("naturals", "points"), ("craps", "points")]
    for a, b in pairs:
        common = getattr(spec, a) & getattr(spec, b)
        if common:
            raise GameSpecError(f"{a} and {b} overlap on {sorted(common)}")
    union = spec.naturals | spec.craps | spec.points
    if union - outcomes:
        raise GameSpecError(f"unknown outcomes {sorted(union - outcomes)}")
    if outcomes - union:
        raise GameSpecError(f"outcomes {sorted(outcomes - union)} are unassigned")


def craps() -> PointGameSpec:
    return PointGameSpec({7, 11}, {2, 3, 12}, {4, 5, 6, 8, 9, 10}, name="craps")


def crapless() -> PointGameSpec:
    return PointGameSpec({7}, set(), {2, 3, 4, 5, 6, 8, 9, 10, 11, 12}, name="crapless")


BUILTIN_GAMES = {"craps": craps, "crapless": crapless}


def game_from_dict(data: Mapping, name: str = "custom") -> PointGameSpec:
    missing = {"naturals", "craps", "points"} - set(data)
    if missing:
        raise GameSpecError(f"game file is missing keys {sorted(missing)}")
    try:
        sets = [[int(j) for j in data[key]] for key in ("naturals", "craps", "points")]
    except (TypeError, ValueError) as exc:
        raise GameSpecError(f"outcome lists must hold integers: {exc}") from None
    for values in sets:
        if len(values) != len(set(values)):
            raise GameSpecError("duplicate outcome in game file")
    return PointGameSpec(*map(frozenset, sets), name=data.get("name", name))


def game_to_dict(spec: PointGameSpec) -> dict:
    return {
        "naturals": sorted(spec.naturals),
        "craps": sorted(spec.craps),
        "points": sorted(spec.points),
    }


def load_game(ref: str | Path) -> PointGameSpec:
    """Resolve a built-in game name or a path to a JSON game file."""
    if str(ref) in BUILTIN_GAMES:
        return BUILTIN_GAMES[str(ref)]()
    path = Path(ref)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise GameSpecError(f"no built-in game or file named {ref!r}") from None
    except json.JSONDecodeError as exc:
        raise GameSpecError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise GameSpecError(f"{path}: expected a JSON object")
    return game_from_dict(data, name=path.stem)


Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ChainSpec:
    """Absorbing chain: come-out state first, seven-out state last.

    ``point_groups[i]`` describes transient state ``i + 1``: the points it
    stands for and the per-roll probability of making one of them.
    """

    states: tuple[str, ...]
    P: Matrix
    point_groups: tuple[tuple[frozenset[int], Fraction], ...] = ()
    name: str = "custom"

    def __post_init__(self):
        P = tuple(tuple(Fraction(x) for x in row) for row in self.P)
        object.__setattr__(self, "P", P)
        k = len(self.states)
        if len(P) != k or any(len(row) != k for row in P):
            raise ValueError("P must be square with one row per state")
        if any(x < 0 for row in P for x in row):
            raise ValueError("transition probabilities must be nonnegative")
        if any(sum(row) != 1 for row in P):
            raise ValueError("each row of P must sum to 1")
        if P[-1] != tuple(Fraction(int(i == k - 1)) for i in range(k)):
            raise ValueError("the last state must be absorbing")

    @property
    def Q(self) -> Matrix:
        return tuple(row[:-1] for row in self.P[:-1])

    @property
    def size(self) -> int:
        """Number of transient states."""
        return len(self.states) - 1


def compile_chain(spec: PointGameSpec, merge: bool = True) -> ChainSpec:
    """Build the absorbing chain of a point game.

    With ``merge`` (the default) points sharing a make-probability share a
    state, e.g. 4 and 10 become ``p4-10``. Point states are ordered by
    increasing make-probability.
    """
    validate(spec)
    dice = spec.dice
    p7 = dice[SEVEN]
    if merge:
        by_prob: dict[Fraction, list[int]] = {}
        for j in sorted(spec.points):
            by_prob.setdefault(dice[j], []).append(j)
        groups = [(frozenset(js), p) for p, js in sorted(by_prob.items())]
    else:
        groups = sorted(((frozenset({j}), dice[j]) for j in spec.points),
                        key=lambda g: (g[1], min(g[0])))
    k = len(groups) + 2
    zero = Fraction(0)
    rows = []
    first = [zero] * k
    first[0] = dice.mass(spec.naturals | spec.craps)
    for i, (js, p) in enumerate(groups, start=1):
        first[i] = p * len(js)
    rows.append(first)
    for i, (js, p) in enumerate(groups, start=1):
        row = [zero] * k
        row[0] = p
        row[i] = 1 - p - p7
        row[-1] = p7
        rows.append(row)
    rows.append([zero] * (k - 1) + [Fraction(1)])
    states = ("co",) + tuple(_state_label(js) for js, _ in groups) + ("7o",)
    return ChainSpec(states, tuple(map(tuple, rows)), tuple(groups), name=spec.name)


def _state_label(points: frozenset[int]) -> str:
    return "p" + "-".join(str(j) for j in sorted(points))


def is_standard_craps(chain: ChainSpec) -> bool:
    return chain.P == compile_chain(craps()).P
