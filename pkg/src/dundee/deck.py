"""Deck compositions, canonical ordering, and combinatorial helpers.

A deck composition is a tuple of per-value card counts.  The engines are
symmetric under relabeling of card values, so the canonical form sorts the
counts non-increasingly and memoization keys use that representative.
Trailing zero entries are kept: a value with no remaining cards is a
guaranteed-safe bid, so it still carries game meaning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactmath import falling_factorial

Counts = tuple[int, ...]

_TERM_RE = re.compile(r"^(\d+)(?:x(\d+))?$")


def canonicalize(counts: Sequence[int]) -> Counts:
    """Sort counts non-increasingly; the original labeling is discarded."""
    if len(counts) == 0:
        raise ValueError("deck must have at least one value")
    for c in counts:
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"card counts must be non-negative integers, got {c!r}")
    return tuple(sorted(counts, reverse=True))


def parse_counts(text: str) -> Counts:
    """Parse deck/bid notation: "4,3,2", replication "4x13", or mixed "4x12,3".

    Returns the counts in written order (no canonicalization): bid vectors
    are aligned with their deck index-by-index.
    """
    out: list[int] = []
    for term in text.split(","):
        m = _TERM_RE.match(term.strip())
        if m is None:
            raise ValueError(f"malformed count term {term.strip()!r} in {text!r}")
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) else 1
        if reps < 1:
            raise ValueError(f"replication must be >= 1 in {term.strip()!r}")
        out.extend([value] * reps)
    if not out:
        raise ValueError(f"empty counts in {text!r}")
    return tuple(out)


def format_counts(counts: Sequence[int]) -> str:
    """Compact text form, run-length encoding repeats: (4,)*13 -> "4x13"."""
    parts: list[str] = []
    i = 0
    while i < len(counts):
        j = i
        while j < len(counts) and counts[j] == counts[i]:
            j += 1
        parts.append(f"{counts[i]}x{j - i}" if j - i > 1 else str(counts[i]))
        i = j
    return ",".join(parts)


@dataclass(frozen=True)
class GameState:
    """Remaining deck plus remaining rounds; the adaptive memoization key."""

    deck: Counts
    rounds_left: int

    def __post_init__(self) -> None:
        if self.rounds_left < 0 or self.rounds_left > sum(self.deck):
            raise ValueError(
                f"rounds_left must be in [0, {sum(self.deck)}], got {self.rounds_left}"
            )

    @property
    def decided(self) -> bool:
        return is_decided(self.deck, self.rounds_left)


def remove_one(deck: Counts, i: int) -> Counts:
    """The deck with one card of the i-th value removed, re-canonicalized.

    ``i`` is a 0-based index into the canonical deck.
    """
    if i < 0 or i >= len(deck):
        raise ValueError(f"value index {i} out of range for deck of {len(deck)} values")
    if deck[i] < 1:
        raise ValueError(f"cannot remove a card of value index {i}: count is 0")
    # Decrement the last member of the equal-count block containing i; for a
    # non-increasing tuple this keeps sorted order without a re-sort.
    j = i
    while j + 1 < len(deck) and deck[j + 1] == deck[i]:
        j += 1
    return deck[:j] + (deck[j] - 1,) + deck[j + 1 :]


def majorizes(s: Counts, q: Counts) -> bool:
    """True iff every partial sum of s dominates that of q.

    Both must be canonical, of equal length and equal total (the comparison
    is within one class of fixed length and sum).
    """
    if len(s) != len(q):
        raise ValueError(f"length mismatch: {len(s)} vs {len(q)}")
    if sum(s) != sum(q):
        raise ValueError(f"total mismatch: {sum(s)} vs {sum(q)}")
    acc_s = 0
    acc_q = 0
    for i in range(len(s) - 1):
        acc_s += s[i]
        acc_q += q[i]
        if acc_s < acc_q:
            return False
    return True


def p_product(s: Sequence[int], q: Sequence[int]) -> int:
    """Product of falling factorials s_i*...*(q_i+1) over indices with s_i > q_i.

    Equals 1 when no index qualifies.  Always strictly positive.  Totals may
    differ; only the lengths must match.
    """
    if len(s) != len(q):
        raise ValueError(f"length mismatch: {len(s)} vs {len(q)}")
    result = 1
    for si, qi in zip(s, q):
        if si > qi:
            result *= falling_factorial(si, qi)
    return result


def is_decided(deck: Sequence[int], rounds_left: int) -> bool:
    """True iff rounds_left exceeds total-minus-max: the player can be forced
    to lose (minimum win probability 0) from here."""
    return rounds_left > sum(deck) - max(deck)


def compositions_non_increasing(v: int, c: int) -> Iterator[Counts]:
    """All non-increasing v-tuples of non-negative integers summing to c,
    in lexicographic order.  This is the class the lemma suites quantify over."""
    if v < 1:
        raise ValueError(f"need at least one part, got v={v}")

    def rec(parts: list[int], remaining: int, cap: int) -> Iterator[Counts]:
        if len(parts) == v - 1:
            if remaining <= cap:
                yield tuple(parts) + (remaining,)
            return
        slots_after = v - len(parts) - 1
        # first entry small enough that the rest can absorb the remainder
        lo = -(-remaining // (slots_after + 1))  # ceil division
        for head in range(lo, min(cap, remaining) + 1):
            yield from rec(parts + [head], remaining - head, head)

    # lexicographic ascending over tuples; smallest head first
    yield from rec([], c, c)
