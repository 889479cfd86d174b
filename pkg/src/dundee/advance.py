"""Exact analysis of advance (pre-committed) bids.

An advance strategy is a bid vector b aligned with the deck s: value i is
named b_i times, in any order (the win probability does not depend on the
order).  The recursion tracks a multiset of (bids-left, cards-left) pairs
plus a count f of "safe" cards: cards whose value has no remaining bids and
so can never cause a coincidence.  When a value's bids run out, its cards
fold into f.  Keeping the pair multiset sorted makes states that differ
only by value relabeling share one memo entry, which is what brings the
standard 52-card deck within desktop reach.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .deck import Counts, canonicalize
from .exactmath import ONE, ZERO, binomial

Pairs = tuple[tuple[int, int], ...]

# (sorted pair multiset, safe-card count) -> probability
_memo: dict[tuple[Pairs, int], Fraction] = {}

# Candidate-enumeration guard: number of raw bid compositions.
MAX_ENUMERATION_CANDIDATES = 2_000_000


def _fold(pairs: list[tuple[int, int]], f: int) -> tuple[Pairs, int]:
    """Drop exhausted-bid pairs, folding their cards into the safe count."""
    live = []
    for b, s in pairs:
        if b == 0:
            f += s
        else:
            live.append((b, s))
    live.sort()
    return tuple(live), f


def _advance(pairs: Pairs, f: int) -> Fraction:
    if not pairs:
        return ONE
    key = (pairs, f)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    total = f + sum(s for _, s in pairs)
    # consume one bid of the first pair's value; a draw of that same value
    # is the coincidence and contributes nothing
    b0, s0 = pairs[0]
    rest = pairs[1:]
    nb = b0 - 1
    acc = ZERO
    i = 0
    while i < len(rest):
        j = i
        while j + 1 < len(rest) and rest[j + 1] == rest[i]:
            j += 1
        bk, sk = rest[i]
        if sk > 0:
            mult = (j - i + 1) * sk
            nxt = [(nb, s0)] + list(rest[:i]) + [(bk, sk - 1)] + list(rest[i + 1 :])
            acc += mult * _advance(*_fold(nxt, f))
        i = j + 1
    if f > 0:
        nxt = [(nb, s0)] + list(rest)
        acc += f * _advance(*_fold(nxt, f - 1))
    result = acc / total
    _memo[key] = result
    return result


def _validate_aligned(bid: Sequence[int], deck: Sequence[int]) -> None:
    if len(bid) != len(deck):
        raise ValueError(f"bid has {len(bid)} entries but deck has {len(deck)} values")
    for b in bid:
        if not isinstance(b, int) or b < 0:
            raise ValueError(f"bid entries must be non-negative integers, got {b!r}")
    for s in deck:
        if not isinstance(s, int) or s < 0:
            raise ValueError(f"card counts must be non-negative integers, got {s!r}")


def pad_bid(bid: Sequence[int], deck: Sequence[int]) -> tuple[Counts, Counts]:
    """Extend a short bid to full length: a fresh value with zero cards
    absorbs the sum(s)-sum(b) rounds in which nothing is really named."""
    _validate_aligned(bid, deck)
    short = sum(deck) - sum(bid)
    if short <= 0:
        raise ValueError(f"pad_bid needs sum(bid) < sum(deck), got {sum(bid)} >= {sum(deck)}")
    return tuple(bid) + (short,), tuple(deck) + (0,)


def advance_win_prob(bid: Sequence[int], deck: Sequence[int]) -> Fraction:
    """Exact win probability of the advance bid b against the deck s."""
    _validate_aligned(bid, deck)
    m = sum(bid)
    c = sum(deck)
    if m > c:
        raise ValueError(f"total bids {m} exceed deck size {c}")
    b, s = (tuple(bid), tuple(deck)) if m == c else pad_bid(bid, deck)
    f0 = sum(si for bi, si in zip(b, s) if bi == 0)
    pairs = tuple(sorted((bi, si) for bi, si in zip(b, s) if bi > 0))
    return _advance(pairs, f0)


def almost_regular_bid(v: int, m: int) -> Counts:
    """m bids spread as evenly as possible over v values, non-decreasing."""
    if v < 1 or m < 0:
        raise ValueError(f"need v >= 1 and m >= 0, got ({v}, {m})")
    lo, r = divmod(m, v)
    return (lo,) * (v - r) + (lo + 1,) * r


def _block_structure(s: Counts) -> list[int]:
    """Sizes of maximal equal-count runs of a canonical deck."""
    sizes = []
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and s[j + 1] == s[i]:
            j += 1
        sizes.append(j - i + 1)
        i = j + 1
    return sizes


def _non_decreasing_tuples(k: int, total: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (total,)
        return

    def rec(prefix: list[int], left: int, slots: int, minimum: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if left >= minimum:
                yield tuple(prefix) + (left,)
            return
        for head in range(minimum, left // slots + 1):
            yield from rec(prefix + [head], left - head, slots - 1, head)

    yield from rec([], total, k, 0)


def canonical_bids(s: Counts, m: int) -> Iterator[Counts]:
    """All bid vectors summing to m, one representative per symmetry class:
    within each block of equal deck counts, bid entries are non-decreasing."""
    blocks = _block_structure(s)

    def rec(idx: int, left: int) -> Iterator[tuple[int, ...]]:
        if idx == len(blocks) - 1:
            yield from _non_decreasing_tuples(blocks[idx], left)
            return
        for here in range(left + 1):
            for head in _non_decreasing_tuples(blocks[idx], here):
                for tail in rec(idx + 1, left - here):
                    yield head + tail

    yield from rec(0, m)


def expand_orbit(s: Counts, bid: Counts) -> list[Counts]:
    """All distinct bids obtained by permuting entries within equal-count
    blocks of the deck (the full symmetry orbit of a canonical bid)."""
    from itertools import permutations

    blocks = _block_structure(s)
    pieces: list[list[tuple[int, ...]]] = []
    pos = 0
    for size in blocks:
        chunk = bid[pos : pos + size]
        pieces.append(sorted(set(permutations(chunk))))
        pos += size
    out: list[Counts] = []

    def rec(idx: int, acc: tuple[int, ...]) -> None:
        if idx == len(pieces):
            out.append(acc)
            return
        for p in pieces[idx]:
            rec(idx + 1, acc + p)

    rec(0, ())
    return out


def enumerate_optimal_bids(
    deck: Sequence[int], m: int, expand_orbits: bool = False
) -> tuple[list[Counts], Fraction]:
    """All optimal advance bids for the m-round game, plus the optimum.

    Bids are reported aligned with the canonical (non-increasing) deck, one
    representative per value-relabeling class unless ``expand_orbits``.  The
    search is exhaustive over bid compositions, hence exponential in the
    number of values.
    """
    s = canonicalize(deck)
    c = sum(s)
    if m < 1 or m > c:
        raise ValueError(f"rounds must be in [1, {c}], got {m}")
    n_candidates = binomial(m + len(s) - 1, len(s) - 1)
    if n_candidates > MAX_ENUMERATION_CANDIDATES:
        raise ValueError(
            f"{n_candidates} candidate bids exceed the enumeration guard "
            f"({MAX_ENUMERATION_CANDIDATES}); this search is exponential in v"
        )
    best: Fraction | None = None
    argmax: list[Counts] = []
    for bid in canonical_bids(s, m):
        p = advance_win_prob(bid, s)
        if best is None or p > best:
            best = p
            argmax = [bid]
        elif p == best:
            argmax.append(bid)
    assert best is not None
    if expand_orbits:
        expanded: list[Counts] = []
        for bid in argmax:
            expanded.extend(expand_orbit(s, bid))
        argmax = expanded
    return sorted(argmax), best


def minimizing_bids(deck: Sequence[int], m: int) -> tuple[list[Counts], Fraction]:
    """All advance bids minimizing the win probability, plus the minimum.

    If m > c - s1 the minimum is 0, achieved exactly by bids with some
    b_i > c - s_i; otherwise the minimum is the anti-greedy product,
    achieved exactly by stacking all m bids on one most-frequent value.
    """
    s = canonicalize(deck)
    c = sum(s)
    if m < 1 or m > c:
        raise ValueError(f"rounds must be in [1, {c}], got {m}")
    v = len(s)
    s1 = s[0]
    if m > c - s1:
        n_candidates = binomial(m + v - 1, v - 1)
        if n_candidates > MAX_ENUMERATION_CANDIDATES:
            raise ValueError(
                f"{n_candidates} candidate bids exceed the enumeration guard "
                f"({MAX_ENUMERATION_CANDIDATES})"
            )
        zeros = [
            bid
            for bid in all_compositions(v, m)
            if any(bi > c - si for bi, si in zip(bid, s))
        ]
        return sorted(zeros), ZERO
    minimum = ONE
    for i in range(m):
        minimum *= Fraction(c - s1 - i, c - i)
    minimizers = []
    for j in range(v):
        if s[j] == s1:
            minimizers.append((0,) * j + (m,) + (0,) * (v - j - 1))
    return sorted(set(minimizers)), minimum


def all_compositions(v: int, m: int) -> Iterator[Counts]:
    if v == 1:
        yield (m,)
        return
    for head in range(m + 1):
        for tail in all_compositions(v - 1, m - head):
            yield (head,) + tail


def memo_size() -> int:
    return len(_memo)
