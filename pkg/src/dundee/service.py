"""JSON-over-HTTP advisor service plus static hosting for the browser UI.

Built on the standard library's threading HTTP server: the API surface is
five routes and a static file tree, which does not justify a framework
dependency.  Every probability in a response carries the exact fraction
(as strings) and a truncated decimal so clients never re-derive numbers.

Routes:
    POST   /sessions                 create a session
    GET    /sessions/{id}            session state
    GET    /sessions/{id}/advice     advice for the current position
    POST   /sessions/{id}/draws      record a round: {"bid":..,"drawn":..}
    DELETE /sessions/{id}            drop the session
    GET    /...                      static assets (when a directory is given)

Errors: 400 invalid input, 404 unknown session/path, 409 action on a
finished session or stale version tag.
"""

from __future__ import annotations

import json
import mimetypes
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .advisor import SessionError, SessionStore, VersionConflict, default_labels
from .deck import parse_counts

_SESSION_ROUTE = re.compile(r"^/sessions/([0-9a-f]{32})(/advice|/draws)?$")


def _parse_deck_field(body: dict) -> tuple[list[int], tuple[str, ...] | None]:
    deck = body.get("deck")
    if isinstance(deck, str):
        counts = list(parse_counts(deck))
        labels = None
    elif isinstance(deck, dict):
        counts = deck.get("counts")
        if not isinstance(counts, list) or not all(isinstance(c, int) for c in counts):
            raise ValueError("deck.counts must be a list of integers")
        raw_labels = deck.get("labels")
        if raw_labels is None:
            labels = None
        else:
            if not isinstance(raw_labels, list) or not all(
                isinstance(x, str) for x in raw_labels
            ):
                raise ValueError("deck.labels must be a list of strings")
            labels = tuple(raw_labels)
    else:
        raise ValueError('deck must be a notation string or {"counts": [...], "labels": [...]}')
    if labels is None and body.get("standard_labels"):
        labels = default_labels(len(counts), standard=True)
    return counts, labels


class AdvisorRequestHandler(BaseHTTPRequestHandler):
    # set by make_server()
    store: SessionStore
    static_dir: Path | None

    protocol_version = "HTTP/1.1"

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib name
        pass  # quiet by default; tests and the CLI wrap serve() with their own logs

    # -- plumbing -------------------------------------------------------------

    def _send_json(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _error(self, status: int, message: str) -> None:
        self._send_json(status, {"error": message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        body = json.loads(raw)
        if not isinstance(body, dict):
            raise ValueError("request body must be a JSON object")
        return body

    # -- handlers -------------------------------------------------------------

    def do_POST(self) -> None:
        try:
            body = self._read_body()
        except (ValueError, json.JSONDecodeError) as exc:
            self._error(400, f"invalid JSON body: {exc}")
            return
        if self.path == "/sessions":
            self._create_session(body)
            return
        match = _SESSION_ROUTE.match(self.path)
        if match and match.group(2) == "/draws":
            self._apply_draw(match.group(1), body)
            return
        self._error(404, f"no route for POST {self.path}")

    def do_GET(self) -> None:
        match = _SESSION_ROUTE.match(self.path)
        if match:
            session_id, tail = match.group(1), match.group(2)
            try:
                session = self.store.get(session_id)
            except KeyError:
                self._error(404, "unknown session")
                return
            if tail is None:
                self._send_json(200, session.to_json())
            elif tail == "/advice":
                try:
                    self._send_json(200, session.advice())
                except SessionError as exc:
                    self._error(409, str(exc))
            else:
                self._error(404, f"no route for GET {self.path}")
            return
        self._serve_static()

    def do_DELETE(self) -> None:
        match = _SESSION_ROUTE.match(self.path)
        if match and match.group(2) is None:
            try:
                self.store.delete(match.group(1))
            except KeyError:
                self._error(404, "unknown session")
                return
            self.send_response(204)
            self.send_header("Content-Length", "0")
            self.end_headers()
            return
        self._error(404, f"no route for DELETE {self.path}")

    def _create_session(self, body: dict) -> None:
        try:
            counts, labels = _parse_deck_field(body)
            rounds = body.get("rounds")
            if not isinstance(rounds, int):
                raise ValueError("rounds must be an integer")
            mode = body.get("mode", "adaptive")
            bid = body.get("bid")
            if isinstance(bid, str):
                bid = list(parse_counts(bid))
            elif bid is not None and (
                not isinstance(bid, list) or not all(isinstance(b, int) for b in bid)
            ):
                raise ValueError("bid must be a notation string or list of integers")
            session = self.store.create(counts, rounds, mode=mode, labels=labels, bid=bid)
        except ValueError as exc:
            self._error(400, str(exc))
            return
        self._send_json(201, session.to_json())

    def _apply_draw(self, session_id: str, body: dict) -> None:
        bid = body.get("bid")
        drawn = body.get("drawn")
        version = body.get("version")
        if not isinstance(bid, str) or not isinstance(drawn, str):
            self._error(400, 'body must carry string fields "bid" and "drawn"')
            return
        if version is not None and not isinstance(version, int):
            self._error(400, "version must be an integer when given")
            return
        try:
            session = self.store.apply_draw(session_id, bid, drawn, expected_version=version)
        except KeyError:
            self._error(404, "unknown session")
            return
        except VersionConflict as exc:
            self._error(409, str(exc))
            return
        except SessionError as exc:
            status = 409 if "finished" in str(exc) else 400
            self._error(status, str(exc))
            return
        self._send_json(200, session.to_json())

    def _serve_static(self) -> None:
        if self.static_dir is None:
            self._error(404, f"no route for GET {self.path}")
            return
        rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        root = self.static_dir.resolve()
        if root not in target.parents and target != root:
            self._error(404, "not found")
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._error(404, "not found")
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        data = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(
    port: int,
    host: str = "127.0.0.1",
    static_dir: str | Path | None = None,
    store: SessionStore | None = None,
) -> ThreadingHTTPServer:
    """Build (but do not start) the advisor HTTP server."""
    handler = type(
        "BoundAdvisorHandler",
        (AdvisorRequestHandler,),
        {
            "store": store if store is not None else SessionStore(),
            "static_dir": Path(static_dir) if static_dir is not None else None,
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def serve(
    port: int,
    host: str = "127.0.0.1",
    static_dir: str | Path | None = None,
) -> None:
    """Run the advisor service until interrupted."""
    server = make_server(port, host=host, static_dir=static_dir)
    bound_port = server.server_address[1]
    print(f"advisor service listening on http://{host}:{bound_port}")
    if static_dir is not None:
        print(f"serving static assets from {static_dir}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
