"""Desk-scale verification suites: engines against independent oracles.

Each suite exhaustively (or by seeded sampling, for the permanent identity)
compares an engine against ground truth that shares no code with it, and
returns a report listing any witnesses of disagreement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial

from . import advance as advance_engine
from . import greedy as greedy_engine
from . import oracle
from .deck import Counts, compositions_non_increasing, is_decided, remove_one


@dataclass
class VerifyReport:
    suite: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        self.violations.append(message)

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.violations)} VIOLATIONS"
        return f"[{self.suite}] {self.checked} checks: {status}"


def _decks_up_to(max_cards: int, min_values: int = 1, max_values: int | None = None):
    """All canonical decks (zeros included) with 1..max_cards cards."""
    top = max_values if max_values is not None else max_cards
    for v in range(min_values, top + 1):
        for c in range(1, max_cards + 1):
            yield from compositions_non_increasing(v, c)


def verify_adaptive_optimum(max_cards: int = 8) -> VerifyReport:
    """Greedy equals the full game-tree optimum.

    For v >= 3 the optimal first bids must be exactly the minimum-count
    values; for v = 2 the optimum must equal the best two-value bid split.
    """
    report = VerifyReport("adaptive-optimum")
    for s in _decks_up_to(max_cards, min_values=2, max_values=max_cards):
        c = sum(s)
        for m in range(0, c + 1):
            value, argmax = oracle.optimal_adaptive_value(s, m, "max", limit=max_cards)
            report.checked += 1
            g = greedy_engine.greedy_win_prob(s, m)
            if value != g:
                report.fail(f"optimum != greedy: s={s} m={m}: {value} vs {g}")
            if len(s) >= 3 and m >= 1:
                minimum = min(s)
                expected = tuple(j for j, cnt in enumerate(s) if cnt == minimum)
                if argmax != expected:
                    report.fail(
                        f"optimal first bids differ from least-count values: "
                        f"s={s} m={m}: {argmax} vs {expected}"
                    )
            if len(s) == 2 and m >= 1:
                best_split = max(
                    greedy_engine.two_value_prob(s[0], s[1], m - b2, b2)
                    for b2 in range(0, m + 1)
                )
                if value != best_split:
                    report.fail(
                        f"two-value optimum mismatch: s={s} m={m}: {value} vs {best_split}"
                    )
    return report


def verify_min_strategies(max_cards: int = 8) -> VerifyReport:
    """Minimum win probabilities and minimizer sets, adaptive and advance."""
    report = VerifyReport("minimum-strategies")
    for s in _decks_up_to(max_cards, min_values=2, max_values=max_cards):
        if s[-1] == 0:
            continue  # the minimum analysis assumes every value present
        c = sum(s)
        for m in range(1, c + 1):
            report.checked += 1
            value, argmin = oracle.optimal_adaptive_value(s, m, "min", limit=max_cards)
            predicted = greedy_engine.min_adaptive_prob(s, m)
            if value != predicted:
                report.fail(f"adaptive min mismatch: s={s} m={m}: {value} vs {predicted}")
            if m > c - s[0]:
                expected = tuple(
                    j
                    for j in range(len(s))
                    if all(
                        is_decided(remove_one(s, h), m - 1)
                        for h in range(len(s))
                        if h != j and s[h] >= 1
                    )
                )
            else:
                expected = tuple(j for j, cnt in enumerate(s) if cnt == s[0])
            if argmin != expected:
                report.fail(
                    f"adaptive minimizer set mismatch: s={s} m={m}: {argmin} vs {expected}"
                )
            # advance bids: check the closed-form minimum and minimizer set
            # against direct evaluation of every bid vector
            minimizers, minimum = advance_engine.minimizing_bids(s, m)
            min_set = set(minimizers)
            seen_min = None
            for bid in advance_engine.all_compositions(len(s), m):
                p = advance_engine.advance_win_prob(bid, s)
                if seen_min is None or p < seen_min:
                    seen_min = p
                if (p == minimum) != (bid in min_set):
                    report.fail(
                        f"advance minimizer set mismatch at s={s} m={m} b={bid}: "
                        f"p={p} minimum={minimum}"
                    )
            if seen_min != minimum:
                report.fail(f"advance minimum mismatch: s={s} m={m}: {seen_min} vs {minimum}")
    return report


def verify_advance_against_brute_force(max_cards: int = 8) -> VerifyReport:
    """Safe-card recursion equals multiset-permutation enumeration.

    Both sides are invariant under jointly relabeling values (tested
    separately), so one bid per symmetry class covers the full space.
    """
    report = VerifyReport("advance-brute-force")
    for s in _decks_up_to(max_cards):
        c = sum(s)
        for m in range(0, c + 1):
            for bid in advance_engine.canonical_bids(s, m):
                report.checked += 1
                fast = advance_engine.advance_win_prob(bid, s)
                slow = oracle.brute_force_advance(bid, s, limit=max_cards)
                if fast != slow:
                    report.fail(f"advance mismatch: s={s} b={bid}: {fast} vs {slow}")
    return report


def verify_closed_forms(qk_max: int = 12, family_i_max: int = 30) -> VerifyReport:
    """Closed-form families equal the recurrence over their stated ranges."""
    report = VerifyReport("closed-forms")
    for q in range(1, qk_max + 1):
        for k in range(1, qk_max + 1):
            report.checked += 1
            formula = greedy_engine.closed_form_qk1(q, k)
            recurrence = greedy_engine.greedy_full((q, k, 1))
            if formula != recurrence:
                report.fail(f"(q,k,1) closed form mismatch: q={q} k={k}")
    for family, tail in greedy_engine.FAMILY_TAILS.items():
        min_i = {"i22": 2, "i32": 3, "i42": 4, "i33": 3}[family]
        for i in range(min_i, family_i_max + 1):
            report.checked += 1
            formula = greedy_engine.closed_form_family(family, i)
            recurrence = greedy_engine.greedy_full((i,) + tail)
            if formula != recurrence:
                report.fail(f"{family} mismatch at i={i}: {formula} vs {recurrence}")
        report.checked += 1
        if greedy_engine.family_constant(family) != greedy_engine.greedy_full(tail):
            report.fail(f"{family} constant term differs from the tail-deck value")
    return report


def _random_bid(rng: random.Random, v: int, m: int) -> Counts:
    """Uniform composition of m into v parts (stars and bars)."""
    if v == 1:
        return (m,)
    bars = sorted(rng.sample(range(m + v - 1), v - 1))
    prev = -1
    out = []
    for b in bars:
        out.append(b - prev - 1)
        prev = b
    out.append(m + v - 2 - prev)
    return tuple(out)


def verify_permanent_identity(
    max_cards: int = 9,
    exhaustive_max: int = 6,
    samples_per_deck: int = 1000,
    seed: int = 20326,
) -> VerifyReport:
    """c! times the advance win probability equals the Ryser permanent of the
    bid/card 0/1 matrix, for every checked (bid, deck) pair."""
    report = VerifyReport("permanent-identity")
    rng = random.Random(seed)

    def check(bid: Counts, s: Counts) -> None:
        report.checked += 1
        c = sum(s)
        per = oracle.permanent_ryser(oracle.build_bid_matrix(bid, s))
        prob = advance_engine.advance_win_prob(bid, s)
        if per != factorial(c) * prob:
            report.fail(f"permanent identity fails: s={s} b={bid}: per={per} pr={prob}")

    # every bid vector for small decks (zero-count values included) ...
    for s in _decks_up_to(exhaustive_max, max_values=exhaustive_max):
        for m in range(0, sum(s) + 1):
            for bid in advance_engine.all_compositions(len(s), m):
                check(bid, s)
    # ... and seeded random bids for the larger ones
    for c in range(exhaustive_max + 1, max_cards + 1):
        for v in range(1, c + 1):
            for s in compositions_non_increasing(v, c):
                if s[-1] == 0:
                    continue
                for _ in range(samples_per_deck):
                    m = rng.randint(0, c)
                    check(_random_bid(rng, v, m), s)
    return report


def verify_lemmas(c_max: int = 7, v_max: int = 5) -> VerifyReport:
    """Wrap the oracle lemma suite in the common report shape."""
    lem = oracle.lemma_suite(c_max, v_max)
    report = VerifyReport("lemma-suite")
    report.checked = lem.checked_weak + lem.checked_strict + lem.checked_identity
    report.violations = list(lem.violations)
    return report


def verify_monotonicity(max_cards: int = 8) -> VerifyReport:
    """Full-depth value monotonicity under inserting and adding cards.

    Inserting a value never hurts (strictly helps when every count is
    positive); adding a card to an existing value never helps (strictly
    hurts when every other count is positive).  Also: the value is
    non-increasing in the number of rounds.
    """
    report = VerifyReport("monotonicity")
    for s in _decks_up_to(max_cards):
        g_s = greedy_engine.greedy_full(s)
        total = sum(s)
        # insertion of a new value with any count that fits the card budget
        for extra in range(0, max_cards - total + 1):
            report.checked += 1
            g_q = greedy_engine.greedy_full(s + (extra,))
            if g_q < g_s:
                report.fail(f"insertion hurt: s={s} extra={extra}")
            if all(cnt > 0 for cnt in s) and g_q <= g_s:
                report.fail(f"insertion not strict: s={s} extra={extra}")
        # one more card of an existing value
        if total < max_cards:
            seen = set()
            for p in range(len(s)):
                if s[p] in seen:
                    continue
                seen.add(s[p])
                bumped = s[:p] + (s[p] + 1,) + s[p + 1 :]
                report.checked += 1
                g_q = greedy_engine.greedy_full(bumped)
                if g_q > g_s:
                    report.fail(f"extra card helped: s={s} position={p}")
                # strictness needs at least one other value, all of them present
                others_positive = len(s) >= 2 and all(
                    cnt > 0 for i, cnt in enumerate(s) if i != p
                )
                if others_positive and g_q >= g_s:
                    report.fail(f"extra card not strictly worse: s={s} position={p}")
        # more rounds never help
        values = [greedy_engine.greedy_win_prob(s, m) for m in range(0, total + 1)]
        report.checked += 1
        if any(values[i] < values[i + 1] for i in range(total)):
            report.fail(f"rounds monotonicity fails: s={s}")
    return report


SUITES = {
    "oracle": lambda max_cards: [
        verify_adaptive_optimum(max_cards),
        verify_min_strategies(max_cards),
        verify_advance_against_brute_force(max_cards),
    ],
    "lemmas": lambda max_cards: [verify_lemmas(c_max=max_cards, v_max=5)],
    "closed-forms": lambda max_cards: [verify_closed_forms()],
    "permanent": lambda max_cards: [verify_permanent_identity(max_cards=max_cards)],
    "monotonicity": lambda max_cards: [verify_monotonicity(max_cards)],
}
