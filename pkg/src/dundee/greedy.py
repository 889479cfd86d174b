"""Exact adaptive-strategy analysis.

The core is the memoized recurrence for the greedy strategy's win
probability: bid a least-frequent remaining value; survive the round with
probability s_i/c for each other value i, leaving the deck with one card of
value i removed.  With the deck kept canonical (non-increasing), the named
value is the last entry, and equal-count values are grouped into blocks so
each distinct child deck is computed once.

Also here: the two-value closed form, the anti-greedy minimum, per-value
one-step bid values for the advisor, and the hard-coded closed-form
families used purely as cross-checks on the recurrence.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Sequence

from .deck import Counts, canonicalize
from .exactmath import ONE, ZERO, binomial

# Memo shared by all callers: (canonical deck, rounds) -> probability.
# Entries never change once written; dict get/set are atomic, so concurrent
# idempotent inserts are safe.
_memo: dict[tuple[Counts, int], Fraction] = {}


def _ensure_stack(total: int) -> None:
    # recursion descends one card per level
    need = total + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _blocks(s: Counts) -> list[tuple[int, int, int]]:
    """Maximal runs of equal counts as (count value, block size, last index)."""
    out = []
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and s[j + 1] == s[i]:
            j += 1
        out.append((s[i], j - i + 1, j))
        i = j + 1
    return out


def _child(s: Counts, last_index: int) -> Counts:
    # decrementing the last entry of an equal block keeps non-increasing order
    return s[: last_index] + (s[last_index] - 1,) + s[last_index + 1 :]


def _greedy(s: Counts, m: int) -> Fraction:
    if m == 0 or s[-1] == 0:
        return ONE
    key = (s, m)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    c = sum(s)
    acc = ZERO
    blocks = _blocks(s)
    for count, size, last in blocks:
        # the named value is the last entry (a least-frequent value); its own
        # cards are the coincidence and contribute nothing
        mult = size - 1 if last == len(s) - 1 else size
        if mult == 0:
            continue
        acc += mult * count * _greedy(_child(s, last), m - 1)
    result = acc / c
    _memo[key] = result
    return result


def greedy_win_prob(deck: Sequence[int], m: int) -> Fraction:
    """Exact win probability of the greedy strategy in the m-round game."""
    s = canonicalize(deck)
    total = sum(s)
    if m < 0 or m > total:
        raise ValueError(f"rounds must be in [0, {total}], got {m}")
    _ensure_stack(total)
    return _greedy(s, m)


def greedy_full(deck: Sequence[int]) -> Fraction:
    """Greedy win probability when the game runs through the whole deck."""
    s = canonicalize(deck)
    return greedy_win_prob(s, sum(s))


def two_value_prob(s1: int, s2: int, b1: int, b2: int) -> Fraction:
    """Win probability with two values when value 1 is named b1 times and
    value 2 is named b2 times: C(s1+s2-b1-b2, s1-b2) / C(s1+s2, s1).

    Nonzero exactly when b1 <= s2 and b2 <= s1.
    """
    if not (s1 >= s2 >= 0):
        raise ValueError(f"need s1 >= s2 >= 0, got ({s1}, {s2})")
    if b1 < 0 or b2 < 0:
        raise ValueError(f"bids must be non-negative, got ({b1}, {b2})")
    if b1 + b2 > s1 + s2:
        raise ValueError(f"total bids {b1 + b2} exceed deck size {s1 + s2}")
    return Fraction(binomial(s1 + s2 - b1 - b2, s1 - b2), binomial(s1 + s2, s1))


def min_adaptive_prob(deck: Sequence[int], m: int) -> Fraction:
    """Smallest win probability over all adaptive strategies.

    Zero exactly when the start is decided (m > c - s1); otherwise the
    product prod_{i<m} (c-s1-i)/(c-i), achieved by anti-greedy play.
    """
    s = canonicalize(deck)
    c = sum(s)
    if m < 0 or m > c:
        raise ValueError(f"rounds must be in [0, {c}], got {m}")
    s1 = s[0]
    if m > c - s1:
        return ZERO
    result = ONE
    for i in range(m):
        result *= Fraction(c - s1 - i, c - i)
    return result


def bid_values(deck: Sequence[int], m: int) -> list[Fraction]:
    """Win probability of bidding each value now and playing greedily after.

    Entry j is (1/c) * sum over h != j of s_h * g_{m-1}(deck minus one card
    of value h), aligned with the canonical deck.  The maximum entries are
    exactly the minimum-count indices.
    """
    s = canonicalize(deck)
    c = sum(s)
    if c < 1:
        raise ValueError("deck has no cards")
    if m < 1 or m > c:
        raise ValueError(f"rounds must be in [1, {c}], got {m}")
    _ensure_stack(c)
    blocks = _blocks(s)
    per_block = [
        (count, size, count * _greedy(_child(s, last), m - 1) if count > 0 else ZERO)
        for count, size, last in blocks
    ]
    total = sum(size * term for _, size, term in per_block)
    out: list[Fraction] = []
    for count, size, term in per_block:
        value = Fraction(total - term, c)
        out.extend([value] * size)
    return out


def closed_form_qk1(q: int, k: int) -> Fraction:
    """Full-depth greedy value on a (q, k, 1) deck:
    1/(q+1) + 1/(k+1) - 1/(q+k+1)."""
    if q < 1 or k < 1:
        raise ValueError(f"need q, k >= 1, got ({q}, {k})")
    return Fraction(1, q + 1) + Fraction(1, k + 1) - Fraction(1, q + k + 1)


# Partial-fraction cross-checks for g on (i,2,2), (i,3,2), (i,4,2), (i,3,3)
# decks.  Each entry: minimum i, constant term, [(num, den_coeff, shift)...]
# encoding num / (den_coeff * (i + shift)).
_FAMILIES: dict[str, tuple[int, Fraction, list[tuple[int, int, int]]]] = {
    "i22": (2, Fraction(1, 6), [(8, 3, 1), (-6, 1, 2), (6, 1, 3), (-8, 3, 4)]),
    "i32": (3, Fraction(1, 10), [(2, 1, 1), (-9, 1, 3), (12, 1, 4), (-5, 1, 5)]),
    "i42": (4, Fraction(1, 15), [(2, 1, 1), (-2, 1, 2), (4, 1, 3), (-16, 1, 4), (20, 1, 5), (-8, 1, 6)]),
    "i33": (3, Fraction(1, 20), [(51, 10, 1), (-39, 2, 2), (39, 1, 3), (-48, 1, 4), (33, 1, 5), (-48, 5, 6)]),
}

# Deck tails the families describe, and the constant term's limiting deck.
FAMILY_TAILS: dict[str, tuple[int, ...]] = {
    "i22": (2, 2),
    "i32": (3, 2),
    "i42": (4, 2),
    "i33": (3, 3),
}


def closed_form_family(family: str, i: int) -> Fraction:
    """Evaluate one of the hard-coded partial-fraction families exactly.

    Must equal greedy_full on the deck (i,) + tail; families reject i below
    their stated range rather than extrapolating.
    """
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    min_i, constant, terms = _FAMILIES[family]
    if i < min_i:
        raise ValueError(f"family {family} is stated for i >= {min_i}, got {i}")
    result = constant
    for num, den_coeff, shift in terms:
        result += Fraction(num, den_coeff * (i + shift))
    return result


def family_constant(family: str) -> Fraction:
    """The family's constant term: the limit of the family as i grows."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    return _FAMILIES[family][1]


def memo_size() -> int:
    return len(_memo)
