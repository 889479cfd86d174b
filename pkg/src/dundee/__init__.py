"""Exact win-probability analysis for the Dundee card game.

Engines compute exact rational probabilities for adaptive (greedy and
anti-greedy) play and for pre-committed advance bids, enumerate optimal
bids, cross-check themselves against brute-force oracles, and back a CLI,
an HTTP advisor service, and a Monte Carlo simulator.
"""

from .advance import (
    advance_win_prob,
    almost_regular_bid,
    enumerate_optimal_bids,
    minimizing_bids,
    pad_bid,
)
from .deck import (
    GameState,
    canonicalize,
    format_counts,
    is_decided,
    majorizes,
    p_product,
    parse_counts,
    remove_one,
)
from .exactmath import (
    ExactProb,
    binomial,
    falling_factorial,
    prob_to_json,
    to_decimal_truncated,
)
from .greedy import (
    bid_values,
    closed_form_family,
    closed_form_qk1,
    greedy_full,
    greedy_win_prob,
    min_adaptive_prob,
    two_value_prob,
)
from .simulate import SimReport, StrategySpec, simulate

__version__ = "0.1.0"

__all__ = [
    "ExactProb",
    "GameState",
    "SimReport",
    "StrategySpec",
    "advance_win_prob",
    "almost_regular_bid",
    "bid_values",
    "binomial",
    "canonicalize",
    "closed_form_family",
    "closed_form_qk1",
    "enumerate_optimal_bids",
    "falling_factorial",
    "format_counts",
    "greedy_full",
    "greedy_win_prob",
    "is_decided",
    "majorizes",
    "min_adaptive_prob",
    "minimizing_bids",
    "p_product",
    "pad_bid",
    "parse_counts",
    "prob_to_json",
    "remove_one",
    "simulate",
    "to_decimal_truncated",
    "two_value_prob",
]
