"""Exact rational arithmetic shared by every engine.

All probabilities are `fractions.Fraction` values, which Python keeps in
lowest terms after every operation.  No engine computation ever touches
floating point; floats appear only in the simulator's summary statistics.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Alias used throughout: an exact probability is a Fraction in lowest terms.
ExactProb = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that k < 0 or k > n gives 0."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(a: int, b: int) -> int:
    """The product a*(a-1)*...*(b+1); equals 1 when a <= b (empty product)."""
    if a < 0 or b < 0:
        raise ValueError(f"falling_factorial: arguments must be non-negative, got ({a}, {b})")
    result = 1
    for t in range(b + 1, a + 1):
        result *= t
    return result


def to_decimal_truncated(p: Fraction, digits: int) -> str:
    """Decimal expansion of ``p`` truncated toward zero at ``digits`` places.

    Truncation, never rounding: the returned string's value never exceeds
    ``p`` in magnitude.
    """
    if digits < 1:
        raise ValueError(f"to_decimal_truncated: digits must be >= 1, got {digits}")
    sign = "-" if p < 0 else ""
    scale = 10**digits
    scaled = abs(p.numerator) * scale // p.denominator
    whole, frac = divmod(scaled, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def prob_to_json(p: Fraction, digits: int = 5) -> dict[str, str]:
    """Wire form of an exact probability: numerator, denominator, decimal."""
    return {
        "num": str(p.numerator),
        "den": str(p.denominator),
        "decimal": to_decimal_truncated(p, digits),
    }
