"""Seeded simulation of shooter hands, played directly by the rules.

Nothing here touches the compiled Markov chain, so the estimates are an
independent check on the exact and spectral engines.

Randomness: each stream is a numpy ``Philox`` (4x64, counter-based)
generator keyed from ``SeedSequence(seed).spawn(n_streams)``. One raw
64-bit word u yields one roll of two dice as k = floor(36 u / 2^64),
die1 = k // 6 + 1, die2 = k % 6 + 1. The mapping has no rejection step;
its bias is below 36 / 2^64 per outcome. Trials are cut into streams of
``STREAM_TRIALS`` hands, so results depend only on (trials, seed) and
never on the number of worker threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .game import SEVEN, PointGameSpec, standard_dice

STREAM_TRIALS = 1_000_000

_MASK32 = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)
_SUM_OF_CELL = np.array([i // 6 + i % 6 + 2 for i in range(36)], dtype=np.int8)


def raw_to_sums(raw: np.ndarray) -> np.ndarray:
    """Map uniform 64-bit words to two-dice sums via a multiply-shift."""
    raw = raw.astype(np.uint64, copy=False)
    hi = raw >> _SHIFT32
    lo = raw & _MASK32
    cell = (hi * np.uint64(36) + ((lo * np.uint64(36)) >> _SHIFT32)) >> _SHIFT32
    return _SUM_OF_CELL[cell.astype(np.intp)]


class DiceStream:
    """Iterator of two-dice sums from one Philox stream."""

    def __init__(self, seed, block: int = 4096):
        ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
        self.bitgen = np.random.Philox(ss)
        self.block = block
        self._buf = np.empty(0, dtype=np.int8)
        self._pos = 0

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        if self._pos == len(self._buf):
            self._buf = raw_to_sums(self.bitgen.random_raw(self.block))
            self._pos = 0
        self._pos += 1
        return int(self._buf[self._pos - 1])


def _require_standard_dice(game: PointGameSpec) -> None:
    if game.dice != standard_dice():
        raise ValueError("simulation only supports two standard dice")


def simulate_hand(game: PointGameSpec, rolls: Iterable[int]) -> int:
    """Play one hand from a stream of dice sums; return its number of rolls.

    ``rolls`` may be a :class:`DiceStream` or any forced sequence of sums.
    """
    point = None
    count = 0
    for s in rolls:
        count += 1
        if point is None:
            if s in game.points:
                point = s
        elif s == SEVEN:
            return count
        elif s == point:
            point = None
    raise ValueError(f"roll sequence ended after {count} rolls without a seven out")


def simulate_lengths(game: PointGameSpec, trials: int, seed) -> np.ndarray:
    """Lengths of ``trials`` hands from one stream, played in lockstep.

    Every still-active hand consumes one raw word per round, in hand order.
    """
    _require_standard_dice(game)
    bitgen = np.random.Philox(
        seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed))
    is_point = np.zeros(13, dtype=bool)
    is_point[sorted(game.points)] = True
    lengths = np.zeros(trials, dtype=np.int64)
    idx = np.arange(trials)
    point = np.zeros(trials, dtype=np.int8)  # 0 means coming out
    step = 0
    while idx.size:
        step += 1
        s = raw_to_sums(bitgen.random_raw(idx.size))
        coming_out = point == 0
        sevened = ~coming_out & (s == SEVEN)
        made = ~coming_out & (s == point)
        point = np.where(coming_out & is_point[s], s, point)
        point[made] = 0
        lengths[idx[sevened]] = step
        keep = ~sevened
        idx, point = idx[keep], point[keep]
    return lengths


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    seed: int
    counts: tuple[int, ...]  # counts[L] = number of hands of length L
    mean_length: float
    mean_length_se: float

    @property
    def max_length_observed(self) -> int:
        return len(self.counts) - 1

    @property
    def tail_estimates(self) -> dict[int, tuple[float, float]]:
        """n -> (fraction of hands with L >= n, binomial standard error)."""
        out = {}
        remaining = self.trials
        for n in range(1, len(self.counts)):
            p = remaining / self.trials
            out[n] = (p, math.sqrt(p * (1 - p) / self.trials))
            remaining -= self.counts[n]
        return out

    def tail_count(self, n: int) -> int:
        return int(sum(self.counts[n:]))


def _stream_counts(game, n, seq) -> np.ndarray:
    return np.bincount(simulate_lengths(game, n, seq))


def estimate_tail(game: PointGameSpec, trials: int, seed: int, workers: int = 1) -> SimulationResult:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    _require_standard_dice(game)
    sizes = [STREAM_TRIALS] * (trials // STREAM_TRIALS)
    if trials % STREAM_TRIALS:
        sizes.append(trials % STREAM_TRIALS)
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        parts = list(pool.map(lambda a: _stream_counts(game, *a), zip(sizes, seqs)))
    counts = np.zeros(max(len(c) for c in parts), dtype=np.int64)
    for c in parts:
        counts[: len(c)] += c
    lengths = np.arange(len(counts))
    mean = float((lengths * counts).sum() / trials)
    var = float(((lengths - mean) ** 2 * counts).sum() / max(trials - 1, 1))
    return SimulationResult(trials, seed, tuple(int(c) for c in counts), mean,
                            math.sqrt(var / trials))


def z_scores(result: SimulationResult, exact: dict[int, float]) -> dict[int, float]:
    """(empirical - exact) / null standard error, for each n in ``exact``.

    The standard error uses the exact t(n); where t(n) is 0 or 1 the score
    is 0 if the estimate matches and infinite otherwise.
    """
    tails = result.tail_estimates
    out = {}
    for n, t in exact.items():
        p = tails[n][0] if n in tails else 0.0
        se = math.sqrt(t * (1 - t) / result.trials)
        out[n] = (p - t) / se if se > 0 else (0.0 if p == t else math.inf)
    return out
