"""Command-line interface: engines, table reproduction, verification, serving.

Exit codes: 0 success, 1 verification found violations, 2 usage errors
(argparse), 3 malformed deck/bid notation or invalid values, 4 size-guard
refusals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import advance as advance_engine
from . import greedy as greedy_engine
from . import verify
from .deck import canonicalize, format_counts, parse_counts
from .exactmath import to_decimal_truncated
from .simulate import StrategySpec, simulate

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BAD_INPUT = 3
EXIT_SIZE_GUARD = 4


class SizeGuardError(Exception):
    pass


def _print_prob(label: str, p: Fraction, digits: int) -> None:
    print(f"{label} = {p.numerator}/{p.denominator}")
    print(f"decimal (truncated) = {to_decimal_truncated(p, digits)}")


def _cmd_greedy(args) -> int:
    deck = canonicalize(parse_counts(args.deck))
    rounds = args.rounds if args.rounds is not None else sum(deck)
    p = greedy_engine.greedy_win_prob(deck, rounds)
    print(f"deck {format_counts(deck)} ({sum(deck)} cards), rounds {rounds}")
    _print_prob("greedy win probability", p, args.digits)
    return EXIT_OK


def _cmd_advance(args) -> int:
    deck = parse_counts(args.deck)
    bid = parse_counts(args.bid)
    p = advance_engine.advance_win_prob(bid, deck)
    print(f"deck {format_counts(deck)} ({sum(deck)} cards), bid {format_counts(bid)} ({sum(bid)} rounds)")
    _print_prob("advance win probability", p, args.digits)
    return EXIT_OK


def _cmd_optimal_bids(args) -> int:
    deck = canonicalize(parse_counts(args.deck))
    bids, best = advance_engine.enumerate_optimal_bids(
        deck, args.rounds, expand_orbits=args.expand_orbits
    )
    print(f"deck {format_counts(deck)} ({sum(deck)} cards), rounds {args.rounds}")
    _print_prob("optimal advance win probability", best, args.digits)
    kind = "all optimal bids" if args.expand_orbits else "optimal bids (one per symmetry class)"
    print(f"{kind}:")
    for b in bids:
        print("  {" + ",".join(str(x) for x in b) + "}")
    return EXIT_OK


def _cmd_min(args) -> int:
    deck = canonicalize(parse_counts(args.deck))
    print(f"deck {format_counts(deck)} ({sum(deck)} cards), rounds {args.rounds}")
    if args.advance:
        minimizers, minimum = advance_engine.minimizing_bids(deck, args.rounds)
        _print_prob("minimum advance win probability", minimum, args.digits)
        print("minimizing bids:")
        for b in minimizers:
            print("  {" + ",".join(str(x) for x in b) + "}")
    else:
        p = greedy_engine.min_adaptive_prob(deck, args.rounds)
        _print_prob("minimum adaptive win probability", p, args.digits)
        if p == 0:
            print("the start is decided: suitably bad play can never win")
        else:
            print("achieved exactly by anti-greedy play (always name a most frequent value)")
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.table == "greedy-regular":
        s = args.s
        print(f"full-deck greedy win probability on regular decks of {s}-of-a-kind values")
        print("v\tg (truncated)\texact")
        for v in range(2, args.v_max + 1):
            p = greedy_engine.greedy_full((s,) * v)
            print(f"{v}\t{to_decimal_truncated(p, 4)}\t{p.numerator}/{p.denominator}")
        return EXIT_OK
    if args.table == "optimal-bids":
        print("optimal advance bids with rounds = deck size, three-value decks")
        print("s\toptimal b\tprobability")
        for c in range(3, args.max_cards + 1):
            for s in _three_value_decks(c):
                bids, best = advance_engine.enumerate_optimal_bids(s, c)
                sets = " ".join("{" + ",".join(str(x) for x in b) + "}" for b in bids)
                print(
                    "{" + ",".join(str(x) for x in s) + "}\t" + sets + "\t"
                    + f"{best.numerator}/{best.denominator} [{to_decimal_truncated(best, 4)}]"
                )
        return EXIT_OK
    raise ValueError(f"unknown table {args.table!r}")


def _three_value_decks(c: int):
    for s1 in range(c, 0, -1):
        for s2 in range(min(s1, c - s1), 0, -1):
            s3 = c - s1 - s2
            if 1 <= s3 <= s2:
                yield (s1, s2, s3)


def _parse_strategy(text: str, deck: tuple[int, ...]) -> StrategySpec:
    if text == "greedy":
        return StrategySpec(kind="greedy")
    if text == "anti-greedy":
        return StrategySpec(kind="anti-greedy")
    if text.startswith("advance:"):
        return StrategySpec(kind="advance", bids=parse_counts(text[len("advance:") :]))
    if text.startswith("seq:"):
        one_based = parse_counts(text[len("seq:") :])
        return StrategySpec(kind="fixed-sequence", sequence=tuple(v - 1 for v in one_based))
    raise ValueError(
        f"unknown strategy {text!r}; use greedy, anti-greedy, advance:B, or seq:V1,V2,..."
    )


def _cmd_simulate(args) -> int:
    deck = parse_counts(args.deck)
    rounds = args.rounds if args.rounds is not None else sum(deck)
    strategy = _parse_strategy(args.strategy, deck)
    exact = None
    if not args.no_exact:
        if strategy.kind == "greedy":
            exact = greedy_engine.greedy_win_prob(deck, rounds)
        elif strategy.kind == "anti-greedy":
            exact = greedy_engine.min_adaptive_prob(deck, rounds)
        elif strategy.kind == "advance":
            exact = advance_engine.advance_win_prob(strategy.bids, deck)
    report = simulate(
        deck, rounds, strategy, args.trials, args.seed,
        workers=args.workers, exact_reference=exact,
    )
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        raise ValueError(f"unknown suite {args.suite!r}; choose from {sorted(verify.SUITES)}")
    start = time.monotonic()
    reports = verify.SUITES[args.suite](args.max_cards)
    elapsed = time.monotonic() - start
    ok = True
    for report in reports:
        print(report.summary())
        for violation in report.violations[:50]:
            print(f"  {violation}")
        ok = ok and report.ok
    print(f"elapsed: {elapsed:.1f}s")
    return EXIT_OK if ok else EXIT_VIOLATIONS


def _cmd_serve(args) -> int:
    from .service import serve

    port = args.port
    if port is None:
        port = int(os.environ.get("DUNDEE_PORT", "8000"))
    static = args.static
    if static is None:
        static = os.environ.get("DUNDEE_STATIC")
    serve(port, host=args.host, static_dir=static)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dundee",
        description="Exact win-probability analysis and live-play advice for Dundee.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("greedy", help="adaptive greedy win probability")
    p.add_argument("--deck", required=True, help='deck notation, e.g. "4x13" or "4,3,2"')
    p.add_argument("--rounds", type=int, default=None, help="rounds (default: whole deck)")
    p.add_argument("--digits", type=int, default=5)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("advance", help="advance-bid win probability")
    p.add_argument("--deck", required=True)
    p.add_argument("--bid", required=True, help="bid notation aligned with the deck")
    p.add_argument("--digits", type=int, default=5)
    p.set_defaults(func=_cmd_advance)

    p = sub.add_parser("optimal-bids", help="enumerate all optimal advance bids")
    p.add_argument("--deck", required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--expand-orbits", action="store_true",
                   help="list every optimal bid instead of one per symmetry class")
    p.add_argument("--digits", type=int, default=5)
    p.set_defaults(func=_cmd_optimal_bids)

    p = sub.add_parser("min", help="minimum win probability (worst play)")
    p.add_argument("--deck", required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--advance", action="store_true", help="minimize over advance bids")
    p.add_argument("--digits", type=int, default=5)
    p.set_defaults(func=_cmd_min)

    p = sub.add_parser("table", help="reproduce reference tables")
    p.add_argument("table", choices=["greedy-regular", "optimal-bids"])
    p.add_argument("--s", type=int, default=4, help="cards per value (greedy-regular)")
    p.add_argument("--v-max", type=int, default=10, help="largest value count (greedy-regular)")
    p.add_argument("--max-cards", type=int, default=11, help="largest deck (optimal-bids)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("simulate", help="seeded Monte Carlo play")
    p.add_argument("--deck", required=True)
    p.add_argument("--rounds", type=int, default=None)
    p.add_argument("--strategy", required=True,
                   help="greedy | anti-greedy | advance:B | seq:V1,V2,... (1-based values)")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-exact", action="store_true",
                   help="skip computing the exact reference value")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="run engine-vs-oracle verification suites")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--max-cards", type=int, default=7)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the advisor HTTP service")
    p.add_argument("--port", type=int, default=None,
                   help="port (default: $DUNDEE_PORT or 8000)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None,
                   help="directory of UI assets to serve (default: $DUNDEE_STATIC)")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        if "guard" in message:
            return EXIT_SIZE_GUARD
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
