"""Tests for the adaptive (greedy) engine.

Expected values marked as derived are computed by independent means inside
the test: tiny exhaustive enumerations, the two-value closed form, or the
game-tree oracle.
"""

import itertools
from fractions import Fraction

import pytest

from dundee.deck import compositions_non_increasing
from dundee.exactmath import to_decimal_truncated
from dundee.greedy import (
    bid_values,
    closed_form_family,
    closed_form_qk1,
    family_constant,
    greedy_full,
    greedy_win_prob,
    min_adaptive_prob,
    two_value_prob,
)


def brute_force_greedy_two_cards():
    # both orderings of the (1,1) deck: greedy names one value; it survives
    # round one iff the other value is drawn first, after which the named
    # value is exhausted and the last round is a sure win
    wins = 0
    for ordering in itertools.permutations([0, 1]):
        named = 0  # either value; counts are equal
        if ordering[0] != named:
            wins += 1  # remaining value named safely at round 2
    return Fraction(wins, 2)


class TestRecurrence:
    def test_two_card_deck(self):
        assert greedy_win_prob((1, 1), 2) == brute_force_greedy_two_cards() == Fraction(1, 2)

    def test_zero_rounds(self):
        assert greedy_win_prob((3, 2), 0) == 1

    def test_zero_count_value_is_safe(self):
        for m in range(0, 4):
            assert greedy_win_prob((3, 0), m) == 1

    def test_single_value_deck_always_loses(self):
        assert greedy_win_prob((3,), 1) == 0
        assert greedy_win_prob((3,), 3) == 0

    def test_rejects_bad_rounds(self):
        with pytest.raises(ValueError):
            greedy_win_prob((2, 1), 4)
        with pytest.raises(ValueError):
            greedy_win_prob((2, 1), -1)

    def test_full_depth_values(self):
        assert greedy_full((4, 4)) == Fraction(1, 70)
        assert to_decimal_truncated(greedy_full((4, 4)), 4) == "0.0142"
        assert greedy_full((1, 1, 1)) == Fraction(2, 3)
        assert to_decimal_truncated(greedy_full((4, 4, 4)), 4) == "0.0475"

    def test_rounds_monotonicity(self):
        # more rounds cannot help; exhaustive for small decks
        for v in range(1, 5):
            for c in range(1, 8):
                for s in compositions_non_increasing(v, c):
                    values = [greedy_win_prob(s, m) for m in range(0, c + 1)]
                    assert all(a >= b for a, b in zip(values, values[1:])), s


class TestTwoValueForm:
    def test_brute_force_cross_check(self):
        # every distinct ordering of the (2,1) deck against the fixed
        # bid multiset {value1 x1, value2 x2}
        orderings = {p for p in itertools.permutations([0, 0, 1])}
        bid_seq = [0, 1, 1]
        wins = sum(
            1 for o in orderings if all(b != card for b, card in zip(bid_seq, o))
        )
        assert two_value_prob(2, 1, 1, 2) == Fraction(wins, len(orderings)) == Fraction(1, 3)

    @pytest.mark.parametrize(
        "s1,s2,b1,b2,expected",
        [
            (4, 4, 4, 4, Fraction(1, 70)),
            (2, 1, 2, 0, Fraction(0)),
            (2, 1, 0, 0, Fraction(1)),
        ],
    )
    def test_examples(self, s1, s2, b1, b2, expected):
        assert two_value_prob(s1, s2, b1, b2) == expected

    def test_vanishing_condition(self):
        for s1 in range(0, 6):
            for s2 in range(0, s1 + 1):
                for b1 in range(0, s1 + s2 + 1):
                    for b2 in range(0, s1 + s2 + 1 - b1):
                        p = two_value_prob(s1, s2, b1, b2)
                        assert (p > 0) == (b1 <= s2 and b2 <= s1)

    def test_rejects_preconditions(self):
        with pytest.raises(ValueError):
            two_value_prob(1, 2, 0, 0)
        with pytest.raises(ValueError):
            two_value_prob(2, 1, 3, 1)

    def test_greedy_matches_best_split_exhaustively(self):
        # for two values the game value is the best pre-committed split;
        # exhaustive for decks of up to 10 cards
        for s1 in range(1, 10):
            for s2 in range(0, min(s1, 10 - s1) + 1):
                c = s1 + s2
                for m in range(1, c + 1):
                    best = max(
                        two_value_prob(s1, s2, m - b2, b2) for b2 in range(0, m + 1)
                    )
                    assert greedy_win_prob((s1, s2), m) == best, (s1, s2, m)


class TestMinAdaptive:
    @pytest.mark.parametrize(
        "deck,m,expected",
        [
            ((2, 1, 1), 2, Fraction(1, 6)),  # (2/4)*(1/3)
            ((3, 1), 2, Fraction(0)),  # decided: 2 > 4-3
            ((5, 2), 0, Fraction(1)),
        ],
    )
    def test_examples(self, deck, m, expected):
        assert min_adaptive_prob(deck, m) == expected

    def test_zero_iff_decided(self):
        from dundee.deck import is_decided

        for v in range(2, 5):
            for c in range(2, 9):
                for s in compositions_non_increasing(v, c):
                    if s[-1] == 0:
                        continue
                    for m in range(0, c + 1):
                        assert (min_adaptive_prob(s, m) == 0) == is_decided(s, m)


class TestBidValues:
    def test_two_value_deck_order_immaterial(self):
        values = bid_values((2, 1), 3)
        assert values == [Fraction(1, 3), Fraction(1, 3)]

    def test_full_symmetry(self):
        values = bid_values((1, 1, 1), 3)
        assert values == [Fraction(2, 3)] * 3

    def test_unique_maximum_at_least_count(self):
        values = bid_values((2, 2, 1), 5)
        assert values.index(max(values)) == 2
        assert values[2] > values[0] == values[1]

    def test_max_equals_greedy_value(self):
        for v in range(2, 5):
            for c in range(2, 8):
                for s in compositions_non_increasing(v, c):
                    for m in range(1, c + 1):
                        assert max(bid_values(s, m)) == greedy_win_prob(s, m)

    def test_rejects_zero_rounds(self):
        with pytest.raises(ValueError):
            bid_values((2, 1), 0)


class TestClosedForms:
    @pytest.mark.parametrize(
        "q,k,expected",
        [
            (1, 1, Fraction(2, 3)),
            (2, 1, Fraction(7, 12)),
            (4, 1, Fraction(8, 15)),
        ],
    )
    def test_qk1_values(self, q, k, expected):
        assert closed_form_qk1(q, k) == expected

    def test_qk1_matches_recurrence(self):
        for q in range(1, 8):
            for k in range(1, 8):
                assert closed_form_qk1(q, k) == greedy_full((q, k, 1))

    def test_qk1_rejects_below_range(self):
        with pytest.raises(ValueError):
            closed_form_qk1(0, 1)

    @pytest.mark.parametrize(
        "family,min_i,tail",
        [("i22", 2, (2, 2)), ("i32", 3, (3, 2)), ("i42", 4, (4, 2)), ("i33", 3, (3, 3))],
    )
    def test_family_matches_recurrence(self, family, min_i, tail):
        for i in range(min_i, min_i + 6):
            assert closed_form_family(family, i) == greedy_full((i,) + tail), (family, i)
        with pytest.raises(ValueError):
            closed_form_family(family, min_i - 1)

    def test_family_constants_are_tail_values(self):
        assert family_constant("i22") == greedy_full((2, 2)) == Fraction(1, 6)
        assert family_constant("i32") == greedy_full((3, 2)) == Fraction(1, 10)
        assert family_constant("i42") == greedy_full((4, 2)) == Fraction(1, 15)
        assert family_constant("i33") == greedy_full((3, 3)) == Fraction(1, 20)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            closed_form_family("i52", 5)


class TestLimitTrend:
    def test_large_first_count_approaches_tail_value(self):
        tail_value = Fraction(1, 6)  # the (2,2)-deck value
        gaps = [abs(greedy_full((s1, 2, 2)) - tail_value) for s1 in (64, 128, 256)]
        assert gaps[0] < Fraction(1, 10)
        assert gaps[0] > gaps[1] > gaps[2]

    def test_first_count_monotone_decreasing(self):
        values = [greedy_full((s1, 2, 2)) for s1 in range(2, 12)]
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_bounded_below_by_tail(self):
        for s1 in range(2, 12):
            assert greedy_full((s1, 2, 2)) > greedy_full((2, 2))


def test_regular_two_of_each_trend():
    # the full-depth value on (2,...,2) decks climbs to 1 as values are
    # added; the 0.9 mark is first passed at 97 values (found by computing
    # the exact sequence)
    values = [greedy_full((2,) * v) for v in range(1, 31)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert greedy_full((2,) * 96) <= Fraction(9, 10)
    assert greedy_full((2,) * 97) > Fraction(9, 10)
