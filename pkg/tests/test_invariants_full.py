"""Full-size module-invariant sweeps (the slowest exhaustive checks).

These extend the quick versions in the per-module test files to the largest
stated deck sizes.
"""

import itertools

from dundee.advance import advance_win_prob, canonical_bids
from dundee.deck import compositions_non_increasing
from dundee.greedy import greedy_win_prob
from dundee.oracle import lemma_suite
from dundee.verify import verify_advance_against_brute_force


def test_lemma_suite_full_size():
    report = lemma_suite(8, 5)
    assert report.ok, report.violations[:5]


def test_advance_equals_brute_force_full_size():
    report = verify_advance_against_brute_force(8)
    assert report.ok, report.violations[:5]


def test_advance_never_beats_adaptive_optimum_full_size():
    # every advance bid is a degenerate adaptive strategy; greedy is the
    # adaptive optimum
    for v in range(2, 9):
        for c in range(2, 9):
            for s in compositions_non_increasing(v, c):
                for m in range(1, c + 1):
                    g = greedy_win_prob(s, m)
                    for bid in canonical_bids(s, m):
                        assert advance_win_prob(bid, s) <= g, (s, bid)


def test_joint_relabeling_symmetry_exhaustive():
    # permuting (bid, deck) index pairs together never changes the value
    for v in range(2, 6):
        for c in range(2, 8):
            for s in compositions_non_increasing(v, c):
                perms = list(itertools.permutations(range(v)))
                for m in range(0, c + 1):
                    for bid in canonical_bids(s, m):
                        reference = advance_win_prob(bid, s)
                        for perm in perms:
                            permuted = advance_win_prob(
                                tuple(bid[i] for i in perm), tuple(s[i] for i in perm)
                            )
                            assert permuted == reference, (s, bid, perm)
