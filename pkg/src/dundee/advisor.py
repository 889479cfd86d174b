"""Label-preserving advisor sessions for live play.

Engines work on canonical (sorted) decks; a session keeps the player's own
value labels and remaining counts, translating to canonical form for every
probability query.  Sessions are pure functions of their history: replaying
the recorded draws from the initial deck reproduces the state exactly.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from . import advance as advance_engine
from . import greedy as greedy_engine
from .deck import canonicalize, is_decided
from .exactmath import ONE, prob_to_json

STANDARD_LABELS = ("A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K")


class SessionError(Exception):
    """Invalid action on a session (bad draw, finished game, ...)."""


class VersionConflict(SessionError):
    """Stale version tag on a mutation."""


@dataclass
class DrawRecord:
    bid: str
    drawn: str
    survived: bool


@dataclass
class AdvisorSession:
    id: str
    labels: tuple[str, ...]
    counts: list[int]
    rounds_left: int
    mode: str  # "adaptive" | "advance"
    bid_remaining: list[int] | None
    initial_counts: tuple[int, ...]
    initial_rounds: int
    history: list[DrawRecord] = field(default_factory=list)
    status: str = "in-play"
    version: int = 0

    # -- probability queries ------------------------------------------------

    def win_prob(self) -> Fraction:
        """Exact win probability from here under the session's mode."""
        if self.status == "won":
            return ONE
        if self.status == "lost":
            return Fraction(0)
        if self.mode == "adaptive":
            return greedy_engine.greedy_win_prob(self.counts, self.rounds_left)
        assert self.bid_remaining is not None
        return advance_engine.advance_win_prob(self.bid_remaining, self.counts)

    def advice(self) -> dict:
        """Advice record for the current position (see docs/api.md)."""
        if self.status != "in-play":
            raise SessionError(f"session is finished ({self.status})")
        if self.mode == "adaptive":
            minimum = min(self.counts)
            optimal = [lab for lab, cnt in zip(self.labels, self.counts) if cnt == minimum]
            what_if = self._what_if_values()
            advice: dict = {
                "mode": "adaptive",
                "optimal": optimal,
                "win_prob": prob_to_json(self.win_prob()),
                "what_if": [
                    {"label": lab, "prob": prob_to_json(p)} for lab, p in what_if
                ],
            }
            if self.win_prob() == 0:
                advice["warning"] = "win probability 0 under any play"
            return advice
        assert self.bid_remaining is not None
        next_label = self._next_committed_bid()
        return {
            "mode": "advance",
            "next_bid": next_label,
            "bid_remaining": {
                lab: b for lab, b in zip(self.labels, self.bid_remaining) if b > 0
            },
            "win_prob": prob_to_json(self.win_prob()),
        }

    def _what_if_values(self) -> list[tuple[str, Fraction]]:
        values = greedy_engine.bid_values(self.counts, self.rounds_left)
        canonical = canonicalize(self.counts)
        by_count = {cnt: val for cnt, val in zip(canonical, values)}
        return [(lab, by_count[cnt]) for lab, cnt in zip(self.labels, self.counts)]

    def _next_committed_bid(self) -> str:
        assert self.bid_remaining is not None
        best = None
        for lab, b, s in zip(self.labels, self.bid_remaining, self.counts):
            if b > 0 and (best is None or (b, s) < best[1]):
                best = (lab, (b, s))
        if best is None:
            raise SessionError("no committed bids remain")
        return best[0]

    # -- mechanics ------------------------------------------------------------

    def apply_draw(self, bid_label: str, drawn_label: str) -> None:
        if self.status != "in-play":
            raise SessionError(f"session is finished ({self.status})")
        if bid_label not in self.labels:
            raise SessionError(f"unknown bid label {bid_label!r}")
        if drawn_label not in self.labels:
            raise SessionError(f"unknown drawn label {drawn_label!r}")
        bid_i = self.labels.index(bid_label)
        drawn_i = self.labels.index(drawn_label)
        if self.counts[drawn_i] < 1:
            raise SessionError(f"no cards of {drawn_label!r} remain to draw")
        if self.mode == "advance":
            assert self.bid_remaining is not None
            if self.bid_remaining[bid_i] < 1:
                raise SessionError(f"no committed bids of {bid_label!r} remain")
            self.bid_remaining[bid_i] -= 1
        survived = bid_label != drawn_label
        self.counts[drawn_i] -= 1
        self.rounds_left -= 1
        self.history.append(DrawRecord(bid=bid_label, drawn=drawn_label, survived=survived))
        if not survived:
            self.status = "lost"
        elif self.rounds_left == 0:
            self.status = "won"
        self.version += 1

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "mode": self.mode,
            "status": self.status,
            "version": self.version,
            "rounds_left": self.rounds_left,
            "labels": list(self.labels),
            "counts": {lab: cnt for lab, cnt in zip(self.labels, self.counts)},
            "initial": {
                "counts": {lab: cnt for lab, cnt in zip(self.labels, self.initial_counts)},
                "rounds": self.initial_rounds,
            },
            "history": [
                {"bid": r.bid, "drawn": r.drawn, "survived": r.survived}
                for r in self.history
            ],
            "win_prob": prob_to_json(self.win_prob()),
            "decided": is_decided(self.counts, self.rounds_left) if self.status == "in-play" else None,
        }
        if self.mode == "advance" and self.bid_remaining is not None:
            out["bid_remaining"] = {
                lab: b for lab, b in zip(self.labels, self.bid_remaining)
            }
        return out


def default_labels(v: int, standard: bool = False) -> tuple[str, ...]:
    if standard and v == len(STANDARD_LABELS):
        return STANDARD_LABELS
    return tuple(f"v{i + 1}" for i in range(v))


def create_session(
    counts: list[int] | tuple[int, ...],
    rounds: int,
    mode: str = "adaptive",
    labels: tuple[str, ...] | None = None,
    bid: list[int] | tuple[int, ...] | None = None,
    session_id: str | None = None,
) -> AdvisorSession:
    counts = list(counts)
    total = sum(counts)
    if any(c < 0 for c in counts) or not counts:
        raise ValueError("deck counts must be non-negative and non-empty")
    if not 1 <= rounds <= total:
        raise ValueError(f"rounds must be in [1, {total}], got {rounds}")
    if labels is None:
        labels = default_labels(len(counts))
    if len(labels) != len(counts) or len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct and aligned with counts")
    if mode not in ("adaptive", "advance"):
        raise ValueError(f"mode must be 'adaptive' or 'advance', got {mode!r}")
    bid_remaining: list[int] | None = None
    if mode == "advance":
        if bid is None:
            bid_remaining = list(_pick_optimal_bid(counts, rounds))
        else:
            bid_remaining = list(bid)
            if len(bid_remaining) != len(counts) or any(b < 0 for b in bid_remaining):
                raise ValueError("bid must be non-negative and aligned with the deck")
            if sum(bid_remaining) != rounds:
                raise ValueError(
                    f"bid totals {sum(bid_remaining)}, must equal rounds {rounds}"
                )
    elif bid is not None:
        raise ValueError("bid is only meaningful in advance mode")
    return AdvisorSession(
        id=session_id if session_id is not None else secrets.token_hex(16),
        labels=tuple(labels),
        counts=counts,
        rounds_left=rounds,
        mode=mode,
        bid_remaining=bid_remaining,
        initial_counts=tuple(counts),
        initial_rounds=rounds,
    )


def _pick_optimal_bid(counts: list[int], rounds: int) -> tuple[int, ...]:
    """An optimal advance bid re-aligned with the labeled (unsorted) deck.

    Prefers the evenly-spread bid when it is optimal.
    """
    canonical = canonicalize(counts)
    bids, _ = advance_engine.enumerate_optimal_bids(canonical, rounds)
    regular = tuple(sorted(advance_engine.almost_regular_bid(len(counts), rounds)))
    chosen = None
    for b in bids:
        if tuple(sorted(b)) == regular:
            chosen = b
            break
    if chosen is None:
        chosen = bids[0]
    # map canonical-position bids back onto the labeled deck: match counts
    remaining = list(zip(canonical, chosen))
    out = [0] * len(counts)
    for i, cnt in enumerate(counts):
        for k, (ccnt, cbid) in enumerate(remaining):
            if ccnt == cnt:
                out[i] = cbid
                remaining.pop(k)
                break
    return tuple(out)


def replay(
    counts: list[int] | tuple[int, ...],
    rounds: int,
    mode: str,
    history: list[tuple[str, str]],
    labels: tuple[str, ...] | None = None,
    bid: list[int] | None = None,
) -> AdvisorSession:
    """Rebuild a session by replaying (bid, drawn) pairs from scratch."""
    session = create_session(counts, rounds, mode=mode, labels=labels, bid=bid)
    for bid_label, drawn_label in history:
        session.apply_draw(bid_label, drawn_label)
    return session


class SessionStore:
    """In-memory session store; mutations on one session are serialized."""

    def __init__(self) -> None:
        self._sessions: dict[str, AdvisorSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._global = threading.Lock()

    def create(self, *args, **kwargs) -> AdvisorSession:
        session = create_session(*args, **kwargs)
        with self._global:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        return session

    def get(self, session_id: str) -> AdvisorSession:
        with self._global:
            session = self._sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        return session

    def delete(self, session_id: str) -> None:
        with self._global:
            if session_id not in self._sessions:
                raise KeyError(session_id)
            del self._sessions[session_id]
            del self._locks[session_id]

    def apply_draw(
        self,
        session_id: str,
        bid_label: str,
        drawn_label: str,
        expected_version: int | None = None,
    ) -> AdvisorSession:
        with self._global:
            session = self._sessions.get(session_id)
            lock = self._locks.get(session_id)
        if session is None or lock is None:
            raise KeyError(session_id)
        with lock:
            if expected_version is not None and expected_version != session.version:
                raise VersionConflict(
                    f"version {expected_version} is stale (current {session.version})"
                )
            session.apply_draw(bid_label, drawn_label)
        return session
