"""Independent brute-force ground truth for the exact engines.

Nothing here shares code paths with the engines it checks: the adaptive
oracle searches every first bid at every node of the full game tree, the
advance oracle enumerates multiset permutations of the deck, and the
permanent is evaluated by Ryser inclusion-exclusion.  All are exponential
and guarded by configurable size limits that fail fast instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .deck import Counts, canonicalize, compositions_non_increasing, p_product, remove_one
from .exactmath import ONE, ZERO

MAX_ADAPTIVE_TOTAL = 12
MAX_BRUTE_FORCE_TOTAL = 10
MAX_RYSER_DIM = 16

_adaptive_memo: dict[tuple[Counts, int, str], Fraction] = {}


def _adaptive_value(s: Counts, m: int, objective: str) -> Fraction:
    if m == 0:
        return ONE
    key = (s, m, objective)
    cached = _adaptive_memo.get(key)
    if cached is not None:
        return cached
    c = sum(s)
    pick = max if objective == "max" else min
    best: Fraction | None = None
    seen_counts: set[int] = set()
    for j, count in enumerate(s):
        if count in seen_counts:
            continue  # bidding equal-count values gives identical one-step values
        seen_counts.add(count)
        acc = ZERO
        for h in range(len(s)):
            if h == j or s[h] == 0:
                continue
            acc += s[h] * _adaptive_value(remove_one(s, h), m - 1, objective)
        val = acc / c
        best = val if best is None else pick(best, val)
    assert best is not None
    _adaptive_memo[key] = best
    return best


def optimal_adaptive_value(
    deck: Sequence[int], m: int, objective: str = "max", limit: int = MAX_ADAPTIVE_TOTAL
) -> tuple[Fraction, tuple[int, ...]]:
    """Full game-tree optimum over ALL adaptive strategies.

    Returns (value, indices of optimal first bids into the canonical deck).
    Searches every first bid at every node, so it can refute greedy
    optimality rather than assume it.
    """
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    s = canonicalize(deck)
    c = sum(s)
    if m < 0 or m > c:
        raise ValueError(f"rounds must be in [0, {c}], got {m}")
    if c > limit:
        raise ValueError(f"deck of {c} cards exceeds the adaptive oracle guard ({limit})")
    if m == 0:
        return ONE, tuple(range(len(s)))
    pick = max if objective == "max" else min
    per_bid: list[Fraction] = []
    for j in range(len(s)):
        acc = ZERO
        for h in range(len(s)):
            if h == j or s[h] == 0:
                continue
            acc += s[h] * _adaptive_value(remove_one(s, h), m - 1, objective)
        per_bid.append(acc / c)
    best = pick(per_bid)
    arg = tuple(j for j, val in enumerate(per_bid) if val == best)
    return best, arg


def multiset_permutations(counts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a deck, as tuples of 0-based value indices,
    in lexicographic order."""
    remaining = list(counts)
    total = sum(remaining)
    seq: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(seq) == total:
            yield tuple(seq)
            return
        for v in range(len(remaining)):
            if remaining[v] > 0:
                remaining[v] -= 1
                seq.append(v)
                yield from rec()
                seq.pop()
                remaining[v] += 1

    yield from rec()


# orderings are reused across the many bids checked against one deck
_orderings_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}


def brute_force_advance(
    bid: Sequence[int], deck: Sequence[int], limit: int = MAX_BRUTE_FORCE_TOTAL
) -> Fraction:
    """Advance-bid win probability by direct enumeration of all distinct
    card orderings against one fixed ordering of the bids."""
    if len(bid) != len(deck):
        raise ValueError(f"bid has {len(bid)} entries but deck has {len(deck)} values")
    c = sum(deck)
    if sum(bid) > c:
        raise ValueError(f"total bids {sum(bid)} exceed deck size {c}")
    if c > limit:
        raise ValueError(f"deck of {c} cards exceeds the enumeration guard ({limit})")
    key = tuple(deck)
    orderings = _orderings_cache.get(key)
    if orderings is None:
        orderings = list(multiset_permutations(deck))
        _orderings_cache[key] = orderings
    bid_seq: list[tuple[int, int]] = []  # (round, named value); padding names nothing
    pos = 0
    for v, b in enumerate(bid):
        for _ in range(b):
            bid_seq.append((pos, v))
            pos += 1
    wins = 0
    for ordering in orderings:
        if all(ordering[t] != v for t, v in bid_seq):
            wins += 1
    return Fraction(wins, len(orderings))


def build_bid_matrix(bid: Sequence[int], deck: Sequence[int]) -> list[list[int]]:
    """The 0/1 matrix whose permanent is c! times the advance win probability.

    Rows are bid slots (each real bid forbids its own value; the c-m padding
    rows are all ones), columns are the individual cards.
    """
    if len(bid) != len(deck):
        raise ValueError(f"bid has {len(bid)} entries but deck has {len(deck)} values")
    c = sum(deck)
    m = sum(bid)
    if m > c:
        raise ValueError(f"total bids {m} exceed deck size {c}")
    columns: list[int] = []
    for v, s in enumerate(deck):
        columns.extend([v] * s)
    rows: list[list[int]] = []
    for v, b in enumerate(bid):
        row = [0 if col == v else 1 for col in columns]
        rows.extend([row] * b)
    ones = [1] * c
    rows.extend([list(ones) for _ in range(c - m)])
    return rows


def permanent_ryser(mat: Sequence[Sequence[int]], limit: int = MAX_RYSER_DIM) -> int:
    """Exact permanent by Ryser inclusion-exclusion over column subsets,
    walking subsets in Gray-code order."""
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n > limit:
        raise ValueError(f"dimension {n} exceeds the Ryser guard ({limit})")
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    gray = 0
    size = 0
    for k in range(1, 1 << n):
        bit = (k & -k).bit_length() - 1
        mask = 1 << bit
        if gray & mask:
            gray ^= mask
            size -= 1
            for i in range(n):
                row_sums[i] -= mat[i][bit]
        else:
            gray ^= mask
            size += 1
            for i in range(n):
                row_sums[i] += mat[i][bit]
        prod = 1
        for rs in row_sums:
            if rs == 0:
                prod = 0
                break
            prod *= rs
        if prod:
            total += prod if (n - size) % 2 == 0 else -prod
    return total


@dataclass
class LemmaReport:
    """Outcome of the exhaustive proof-technique inequality suites."""

    checked_weak: int = 0
    checked_strict: int = 0
    checked_identity: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def lemma_suite(c_max: int, v_max: int) -> LemmaReport:
    """Exhaustively check the three product-inequality lemmas.

    Over each class of non-increasing v-tuples with total c (v <= v_max,
    c <= c_max): the majorization inequality on falling-factorial products
    (strict off the diagonal), the one-card exchange identity, and the
    coupled inequality with the greedy value (strict off the diagonal for
    v >= 3).
    """
    from .deck import majorizes
    from .greedy import greedy_win_prob

    report = LemmaReport()
    for v in range(1, v_max + 1):
        for c in range(0, c_max + 1):
            decks = list(compositions_non_increasing(v, c))
            for s in decks:
                for q in decks:
                    # exchange identity needs no majorization
                    for i in range(v):
                        if s[i] >= 1:
                            report.checked_identity += 1
                            lhs = p_product(q, remove_one(s, i)) * p_product(s, q)
                            rhs = s[i] * p_product(q, s) * p_product(remove_one(s, i), q)
                            if lhs != rhs:
                                report.violations.append(
                                    f"exchange identity fails: s={s} q={q} i={i}"
                                )
                    if not majorizes(s, q):
                        continue
                    # here q <= s in the majorization order
                    report.checked_weak += 1
                    pqs = p_product(q, s)
                    psq = p_product(s, q)
                    if pqs > psq:
                        report.violations.append(f"product inequality fails: s={s} q={q}")
                    if q != s:
                        report.checked_strict += 1
                        if pqs >= psq:
                            report.violations.append(
                                f"strict product inequality fails: s={s} q={q}"
                            )
                    for m in range(0, c + 1):
                        gms = greedy_win_prob(s, m)
                        gmq = greedy_win_prob(q, m)
                        report.checked_weak += 1
                        if pqs * gms > psq * gmq:
                            report.violations.append(
                                f"coupled inequality fails: s={s} q={q} m={m}"
                            )
                        if v >= 3 and q != s:
                            report.checked_strict += 1
                            if pqs * gms >= psq * gmq:
                                report.violations.append(
                                    f"strict coupled inequality fails: s={s} q={q} m={m}"
                                )
    return report
