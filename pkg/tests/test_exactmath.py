"""Unit tests for the exact arithmetic helpers."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dundee.exactmath import binomial, falling_factorial, prob_to_json, to_decimal_truncated


class TestBinomial:
    @pytest.mark.parametrize(
        "n,k,expected",
        [
            (8, 4, 70),  # 8*7*6*5/24
            (5, 0, 1),
            (3, 5, 0),  # k > n convention
            (4, -1, 0),
            (0, 0, 1),
        ],
    )
    def test_values(self, n, k, expected):
        assert binomial(n, k) == expected

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=200))
    def test_symmetry(self, n, k):
        if k <= n:
            assert binomial(n, k) == binomial(n, n - k)


class TestFallingFactorial:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (4, 1, 24),  # 4*3*2
            (3, 3, 1),
            (2, 0, 2),
            (0, 5, 1),  # a < b convention
            (5, 5, 1),
        ],
    )
    def test_values(self, a, b, expected):
        assert falling_factorial(a, b) == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            falling_factorial(-1, 0)
        with pytest.raises(ValueError):
            falling_factorial(3, -2)

    @given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50))
    def test_factorial_identity(self, a, b):
        if a >= b:
            assert falling_factorial(a, b) * factorial(b) == factorial(a)


class TestDecimalTruncation:
    @pytest.mark.parametrize(
        "p,digits,expected",
        [
            (Fraction(1, 70), 4, "0.0142"),
            (Fraction(1, 3), 4, "0.3333"),
            (Fraction(1, 2), 4, "0.5000"),
            (Fraction(1), 4, "1.0000"),
            (Fraction(0), 3, "0.000"),
            (Fraction(2, 3), 1, "0.6"),
        ],
    )
    def test_values(self, p, digits, expected):
        assert to_decimal_truncated(p, digits) == expected

    def test_rejects_zero_digits(self):
        with pytest.raises(ValueError):
            to_decimal_truncated(Fraction(1, 2), 0)

    @given(
        st.fractions(min_value=0, max_value=1),
        st.integers(min_value=1, max_value=12),
    )
    def test_never_exceeds_input(self, p, digits):
        rendered = Fraction(to_decimal_truncated(p, digits))
        assert rendered <= p
        assert p - rendered < Fraction(1, 10**digits)


def test_prob_json_shape():
    payload = prob_to_json(Fraction(1, 70), digits=4)
    assert payload == {"num": "1", "den": "70", "decimal": "0.0142"}


def test_fraction_lowest_terms_after_arithmetic():
    # the Fraction type normalizes eagerly; spot-check the contract the
    # engines rely on
    a = Fraction(6, 8)
    b = Fraction(2, 8)
    total = a + b
    assert (total.numerator, total.denominator) == (1, 1)
    import math

    product = Fraction(4, 6) * Fraction(3, 2)
    assert math.gcd(product.numerator, product.denominator) == 1
