"""Seeded Monte Carlo play for statistical cross-validation of the engines.

Each trial shuffles an explicit card list (one entry per physical card)
with the standard library Mersenne Twister and plays the requested strategy.
Trials are processed in fixed-size chunks with per-chunk derived seeds, so
the aggregate report is bit-identical for a given seed regardless of how
many workers process the chunks.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import prob_to_json

PRNG_ALGORITHM = "mersenne-twister"
CHUNK_TRIALS = 10_000


@dataclass(frozen=True)
class StrategySpec:
    """What the simulated player does each round.

    kind: "greedy", "anti-greedy", "advance" (bids: per-value counts, played
    in value order), or "fixed-sequence" (sequence: 0-based value indices).
    """

    kind: str
    bids: tuple[int, ...] | None = None
    sequence: tuple[int, ...] | None = None

    def bid_sequence(self, deck: Sequence[int], m: int) -> list[int] | None:
        """Pre-committed bid order for non-adaptive kinds, None for adaptive."""
        if self.kind in ("greedy", "anti-greedy"):
            return None
        if self.kind == "advance":
            if self.bids is None or len(self.bids) != len(deck):
                raise ValueError("advance strategy needs a bid vector aligned with the deck")
            if sum(self.bids) != m:
                raise ValueError(f"advance bids total {sum(self.bids)}, need exactly {m}")
            seq: list[int] = []
            for v, b in enumerate(self.bids):
                seq.extend([v] * b)
            return seq
        if self.kind == "fixed-sequence":
            if self.sequence is None or len(self.sequence) != m:
                raise ValueError(f"fixed sequence must have exactly {m} entries")
            for v in self.sequence:
                if not 0 <= v < len(deck):
                    raise ValueError(f"sequence names value index {v}, deck has {len(deck)}")
            return list(self.sequence)
        raise ValueError(f"unknown strategy kind {self.kind!r}")


@dataclass(frozen=True)
class SimReport:
    trials: int
    wins: int
    estimate: float
    stderr: float
    seed: int
    algorithm: str = PRNG_ALGORITHM
    exact_reference: Fraction | None = None

    def to_json(self) -> dict:
        out = {
            "trials": self.trials,
            "wins": self.wins,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "seed": self.seed,
            "algorithm": self.algorithm,
        }
        if self.exact_reference is not None:
            out["exact_reference"] = prob_to_json(self.exact_reference)
        return out


def shuffled_cards(deck: Sequence[int], rng: random.Random) -> list[int]:
    """A fresh uniformly shuffled card list: one 0-based value per card."""
    cards: list[int] = []
    for v, s in enumerate(deck):
        cards.extend([v] * s)
    rng.shuffle(cards)
    return cards


def _play_chunk(
    deck: tuple[int, ...],
    m: int,
    kind: str,
    bid_seq: tuple[int, ...] | None,
    derived_seed: int,
    trials: int,
) -> int:
    rng = random.Random(derived_seed)
    v = len(deck)
    wins = 0
    greedy = kind == "greedy"
    adaptive = bid_seq is None
    for _ in range(trials):
        cards = shuffled_cards(deck, rng)
        won = True
        if adaptive:
            counts = list(deck)
            # ties broken by lowest index; immaterial to the distribution
            if greedy:
                pick = min(range(v), key=counts.__getitem__)
            else:
                pick = max(range(v), key=lambda i: (counts[i], -i))
            for t in range(m):
                if greedy and counts[pick] == 0:
                    break  # a zero-count value is a guaranteed-safe bid forever
                drawn = cards[t]
                if drawn == pick:
                    won = False
                    break
                counts[drawn] -= 1
                if greedy:
                    if counts[drawn] < counts[pick] or (
                        counts[drawn] == counts[pick] and drawn < pick
                    ):
                        pick = drawn
                else:
                    pick = max(range(v), key=lambda i: (counts[i], -i))
        else:
            for t in range(m):
                if cards[t] == bid_seq[t]:
                    won = False
                    break
        if won:
            wins += 1
    return wins


def _derived_seed(seed: int, chunk_index: int) -> int:
    # disjoint integer seeds per chunk; int seeding is stable across runs
    return seed * (1 << 64) + chunk_index


def simulate(
    deck: Sequence[int],
    m: int,
    strategy: StrategySpec,
    trials: int,
    seed: int,
    workers: int = 1,
    exact_reference: Fraction | None = None,
) -> SimReport:
    """Play `trials` independent games; deterministic for a given seed."""
    deck = tuple(deck)
    c = sum(deck)
    if m < 1 or m > c:
        raise ValueError(f"rounds must be in [1, {c}], got {m}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    bid_seq_list = strategy.bid_sequence(deck, m)
    bid_seq = tuple(bid_seq_list) if bid_seq_list is not None else None
    chunks = []
    done = 0
    idx = 0
    while done < trials:
        n = min(CHUNK_TRIALS, trials - done)
        chunks.append((deck, m, strategy.kind, bid_seq, _derived_seed(seed, idx), n))
        done += n
        idx += 1
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            wins = sum(pool.map(_play_chunk_star, chunks))
    else:
        wins = sum(_play_chunk(*chunk) for chunk in chunks)
    estimate = wins / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return SimReport(
        trials=trials,
        wins=wins,
        estimate=estimate,
        stderr=stderr,
        seed=seed,
        exact_reference=exact_reference,
    )


def _play_chunk_star(args: tuple) -> int:
    return _play_chunk(*args)
