"""Unit tests for deck compositions and the combinatorial helpers."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dundee.deck import (
    GameState,
    canonicalize,
    compositions_non_increasing,
    format_counts,
    is_decided,
    majorizes,
    p_product,
    parse_counts,
    remove_one,
)


class TestCanonicalize:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ((1, 3, 2), (3, 2, 1)),
            ((4, 4, 4), (4, 4, 4)),
            ((0, 2), (2, 0)),
        ],
    )
    def test_examples(self, raw, expected):
        assert canonicalize(raw) == expected

    def test_rejects_empty_and_negative(self):
        with pytest.raises(ValueError):
            canonicalize(())
        with pytest.raises(ValueError):
            canonicalize((1, -1))

    @given(st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=8))
    def test_sorted_and_idempotent(self, raw):
        canon = canonicalize(raw)
        assert sorted(canon, reverse=True) == list(canon)
        assert canonicalize(canon) == canon
        assert sum(canon) == sum(raw)


class TestParseCounts:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("4,3,2", (4, 3, 2)),
            ("4x13", (4,) * 13),
            ("4x12,3", (4,) * 12 + (3,)),
            ("0,2,2", (0, 2, 2)),
            (" 1 , 2 ", (1, 2)),
        ],
    )
    def test_forms(self, text, expected):
        assert parse_counts(text) == expected

    @pytest.mark.parametrize("bad", ["", "4x", "x3", "4x-2", "a,b", "4,,2", "3x0"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_counts(bad)

    def test_format_roundtrip(self):
        for counts in [(4,) * 13, (4, 3, 2), (4,) * 12 + (3,), (1,)]:
            assert parse_counts(format_counts(counts)) == counts


class TestRemoveOne:
    @pytest.mark.parametrize(
        "deck,i,expected",
        [
            ((3, 2, 2), 0, (2, 2, 2)),
            ((3, 2, 2), 1, (3, 2, 1)),
            ((2, 2), 0, (2, 1)),
        ],
    )
    def test_examples(self, deck, i, expected):
        assert remove_one(deck, i) == expected

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            remove_one((2, 1), 2)
        with pytest.raises(ValueError):
            remove_one((2, 0), 1)

    def test_preserves_canonical_form_and_total(self):
        for deck in compositions_non_increasing(4, 7):
            for i in range(4):
                if deck[i] >= 1:
                    child = remove_one(deck, i)
                    assert sum(child) == sum(deck) - 1
                    assert canonicalize(child) == child

    def test_equal_entries_give_identical_children(self):
        deck = (3, 2, 2, 2, 1)
        assert remove_one(deck, 1) == remove_one(deck, 2) == remove_one(deck, 3)


class TestMajorizes:
    @pytest.mark.parametrize(
        "s,q,expected",
        [
            ((2, 0), (1, 1), True),
            ((1, 1), (2, 0), False),
            ((2, 1), (2, 1), True),
        ],
    )
    def test_examples(self, s, q, expected):
        assert majorizes(s, q) is expected

    def test_rejects_mismatches(self):
        with pytest.raises(ValueError):
            majorizes((2, 1), (2, 1, 0))
        with pytest.raises(ValueError):
            majorizes((2, 1), (1, 1))

    @pytest.mark.parametrize("v,c", [(3, 6), (4, 8), (5, 8), (2, 8)])
    def test_partial_order_axioms(self, v, c):
        decks = list(compositions_non_increasing(v, c))
        for s in decks:
            assert majorizes(s, s)  # reflexive
        for s, q in itertools.product(decks, repeat=2):
            if majorizes(s, q) and majorizes(q, s):
                assert s == q  # antisymmetric
        for s, q, r in itertools.product(decks, repeat=3):
            if majorizes(s, q) and majorizes(q, r):
                assert majorizes(s, r)  # transitive


class TestPProduct:
    @pytest.mark.parametrize(
        "s,q,expected",
        [
            ((2, 0), (1, 1), 2),
            ((1, 1), (2, 0), 1),
            ((3, 3), (3, 3), 1),
        ],
    )
    def test_examples(self, s, q, expected):
        assert p_product(s, q) == expected

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            p_product((1, 2), (1,))

    def test_always_positive(self):
        for s in compositions_non_increasing(3, 6):
            for q in compositions_non_increasing(3, 5):
                assert p_product(s, q) >= 1

    def test_product_inequality_exhaustive(self):
        # majorization inequality on the falling-factorial products,
        # strict off the diagonal: exhaustive for c <= 8, v <= 5
        for v in range(1, 6):
            for c in range(0, 9):
                decks = list(compositions_non_increasing(v, c))
                for s in decks:
                    for q in decks:
                        if majorizes(s, q):
                            lhs, rhs = p_product(q, s), p_product(s, q)
                            assert lhs <= rhs, (s, q)
                            if q != s:
                                assert lhs < rhs, (s, q)

    def test_exchange_identity_exhaustive(self):
        # removing one card relates the two product orders exactly,
        # for all pairs in each class with c <= 8
        for v in range(1, 5):
            for c in range(1, 9):
                decks = list(compositions_non_increasing(v, c))
                for s in decks:
                    for q in decks:
                        for i in range(v):
                            if s[i] >= 1:
                                si = remove_one(s, i)
                                assert p_product(q, si) * p_product(s, q) == s[i] * p_product(
                                    q, s
                                ) * p_product(si, q)


class TestDecided:
    @pytest.mark.parametrize(
        "deck,m,expected",
        [
            ((3, 1), 2, True),
            ((2, 1, 1), 2, False),
            ((1,), 1, True),
        ],
    )
    def test_examples(self, deck, m, expected):
        assert is_decided(deck, m) is expected
        assert GameState(deck, m).decided is expected

    def test_game_state_validation(self):
        with pytest.raises(ValueError):
            GameState((2, 1), 4)
        with pytest.raises(ValueError):
            GameState((2, 1), -1)


def test_composition_enumeration_is_complete_and_lexicographic():
    decks = list(compositions_non_increasing(3, 4))
    assert decks == sorted(decks)
    assert len(set(decks)) == len(decks)
    brute = {
        tuple(sorted(t, reverse=True))
        for t in itertools.product(range(5), repeat=3)
        if sum(t) == 4
    }
    assert set(decks) == brute
