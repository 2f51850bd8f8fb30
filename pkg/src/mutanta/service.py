"""Local HTTP facade for driving flip/mutate/rotate sessions from a browser.

Sessions live in memory and are evicted after idling; each session holds a
triangulation plus the list of applied moves, so undo is a replay from the
initial fan.  Every response state is recomputed from the triangulation
alone, which keeps the quiver view and the polygon view consistent by
construction.

Endpoints (JSON bodies, plain-integer fields):

    POST /session                {"n": rank}       -> {"id", "state"}
    POST /session/{id}/flip      {"diagonal": [a, b]} -> state
    POST /session/{id}/mutate    {"vertex": k}     -> state
    POST /session/{id}/rotate    {"steps": i}      -> state
    POST /session/{id}/undo                        -> state
    GET  /catalog/{n}                              -> {"n", "count", "quivers"}

Errors are {"error": code, "message": text} with HTTP 400/404/409.
"""

from __future__ import annotations

import json
import re
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .enumeration import DEFAULT_MUTATION_CLASS_LIMIT, enumerate_mutation_class
from .polygon import (
    Triangulation,
    classify_close_diagonal,
    fan_triangulation,
    flip,
    is_close_to_border,
    quiver_of,
    rotate,
    rotation_canonical,
)
from .quiver import quiver_to_json

DEFAULT_SESSION_TTL = 30 * 60  # seconds of idleness before a session is dropped

_LOCAL_ORIGIN = re.compile(r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$")
_SESSION_ROUTE = re.compile(r"^/session/([0-9a-f]{32})/(flip|mutate|rotate|undo)$")
_CATALOG_ROUTE = re.compile(r"^/catalog/(\d+)$")


class ServiceError(Exception):
    """Error with an HTTP status and a short machine-readable code."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def state_view(t: Triangulation) -> dict:
    """UI-facing snapshot: diagonals in quiver-vertex order plus derived facts."""
    q = quiver_of(t)
    m = t.size
    close = [is_close_to_border(d, m) for d in t.diagonals]
    classification = [
        classify_close_diagonal(t, d).value if flag else None
        for d, flag in zip(t.diagonals, close)
    ]
    return {
        "polygon_size": m,
        "diagonals": [list(d) for d in t.diagonals],
        "arrows": [list(a) for a in sorted(q.arrows)],
        "close_to_border": close,
        "classification": classification,
        "orbit_size": rotation_canonical(t).orbit_size,
    }


class Session:
    __slots__ = ("id", "n", "initial", "current", "history", "lock", "last_access")

    def __init__(self, sid: str, n: int):
        self.id = sid
        self.n = n
        self.initial = fan_triangulation(n + 3, 0)
        self.current = self.initial
        self.history: list[tuple] = []
        self.lock = threading.Lock()
        self.last_access = time.monotonic()


def _apply_move(t: Triangulation, move: tuple) -> Triangulation:
    kind = move[0]
    if kind == "flip":
        return flip(t, move[1])
    if kind == "mutate":
        return flip(t, t.diagonals[move[1]])
    if kind == "rotate":
        return rotate(t, move[1])
    raise AssertionError(f"unknown move {move!r}")


class ExplorerService:
    """Session store and catalog cache behind the HTTP handler.

    Requests to one session are serialized by its lock; distinct sessions
    proceed independently.  Catalogs are computed once per rank and reused.
    """

    def __init__(self, max_n: int | None = None, session_ttl: float = DEFAULT_SESSION_TTL):
        self.max_n = DEFAULT_MUTATION_CLASS_LIMIT if max_n is None else max_n
        self.session_ttl = session_ttl
        self._sessions: dict[str, Session] = {}
        self._sessions_lock = threading.Lock()
        self._catalogs: dict[int, dict] = {}
        self._catalogs_lock = threading.Lock()

    def _evict_idle(self) -> None:
        cutoff = time.monotonic() - self.session_ttl
        with self._sessions_lock:
            stale = [sid for sid, s in self._sessions.items() if s.last_access < cutoff]
            for sid in stale:
                del self._sessions[sid]

    def _get_session(self, sid: str) -> Session:
        with self._sessions_lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ServiceError(404, "unknown_session", f"no session with id {sid!r}")
        return session

    def create_session(self, payload: dict) -> dict:
        self._evict_idle()
        n = payload.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or not 2 <= n <= self.max_n:
            raise ServiceError(
                400, "invalid_rank",
                f"'n' must be an integer between 2 and {self.max_n}",
            )
        session = Session(uuid.uuid4().hex, n)
        with self._sessions_lock:
            self._sessions[session.id] = session
        return {"id": session.id, "state": state_view(session.current)}

    def session_move(self, sid: str, action: str, payload: dict) -> dict:
        self._evict_idle()
        session = self._get_session(sid)
        with session.lock:
            session.last_access = time.monotonic()
            if action == "flip":
                move = ("flip", self._parse_diagonal(session, payload))
            elif action == "mutate":
                move = ("mutate", self._parse_vertex(session, payload))
            elif action == "rotate":
                steps = payload.get("steps")
                if not isinstance(steps, int) or isinstance(steps, bool):
                    raise ServiceError(400, "invalid_steps", "'steps' must be an integer")
                move = ("rotate", steps)
            elif action == "undo":
                if not session.history:
                    raise ServiceError(409, "empty_history", "nothing to undo")
                session.history.pop()
                current = session.initial
                for past in session.history:
                    current = _apply_move(current, past)
                session.current = current
                return state_view(session.current)
            else:
                raise ServiceError(404, "unknown_action", f"no action {action!r}")
            session.current = _apply_move(session.current, move)
            session.history.append(move)
            return state_view(session.current)

    @staticmethod
    def _parse_diagonal(session: Session, payload: dict) -> tuple[int, int]:
        raw = payload.get("diagonal")
        if (
            not isinstance(raw, (list, tuple))
            or len(raw) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw)
        ):
            raise ServiceError(400, "invalid_diagonal", "'diagonal' must be [a, b] integers")
        d = (raw[0], raw[1]) if raw[0] < raw[1] else (raw[1], raw[0])
        if d not in session.current.diagonals:
            raise ServiceError(
                409, "diagonal_not_present",
                f"diagonal {list(d)} is not in the current triangulation",
            )
        return d

    @staticmethod
    def _parse_vertex(session: Session, payload: dict) -> int:
        k = payload.get("vertex")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ServiceError(400, "invalid_vertex", "'vertex' must be an integer")
        if not 0 <= k < session.n:
            raise ServiceError(
                409, "vertex_out_of_range",
                f"vertex {k} out of range for rank {session.n}",
            )
        return k

    def catalog(self, n: int) -> dict:
        if not 2 <= n <= self.max_n:
            raise ServiceError(
                400, "invalid_rank",
                f"catalog rank must be between 2 and {self.max_n}",
            )
        with self._catalogs_lock:
            cached = self._catalogs.get(n)
            if cached is None:
                members = enumerate_mutation_class(n).members
                cached = {
                    "n": n,
                    "count": len(members),
                    "quivers": [quiver_to_json(m.to_quiver()) for m in members],
                }
                self._catalogs[n] = cached
        return cached


class _Handler(BaseHTTPRequestHandler):
    service: ExplorerService  # set by make_server
    quiet = True

    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):
        if not self.quiet:
            super().log_message(fmt, *args)

    def _cors_headers(self) -> list[tuple[str, str]]:
        origin = self.headers.get("Origin")
        if origin and _LOCAL_ORIGIN.match(origin):
            return [
                ("Access-Control-Allow-Origin", origin),
                ("Vary", "Origin"),
            ]
        return []

    def _send_json(self, status: int, obj) -> None:
        body = json.dumps(obj).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        for name, value in self._cors_headers():
            self.send_header(name, value)
        self.end_headers()
        self.wfile.write(body)

    def _send_error(self, err: ServiceError) -> None:
        self._send_json(err.status, {"error": err.code, "message": err.message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        try:
            data = json.loads(raw)
        except json.JSONDecodeError:
            raise ServiceError(400, "bad_json", "request body is not valid JSON") from None
        if not isinstance(data, dict):
            raise ServiceError(400, "bad_json", "request body must be a JSON object")
        return data

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        for name, value in self._cors_headers():
            self.send_header(name, value)
        self.end_headers()

    def do_POST(self):
        try:
            if self.path == "/session":
                self._send_json(200, self.service.create_session(self._read_body()))
                return
            match = _SESSION_ROUTE.match(self.path)
            if match:
                sid, action = match.group(1), match.group(2)
                body = self._read_body()
                self._send_json(200, self.service.session_move(sid, action, body))
                return
            raise ServiceError(404, "not_found", f"no route for POST {self.path}")
        except ServiceError as err:
            self._send_error(err)

    def do_GET(self):
        try:
            match = _CATALOG_ROUTE.match(self.path)
            if match:
                self._send_json(200, self.service.catalog(int(match.group(1))))
                return
            raise ServiceError(404, "not_found", f"no route for GET {self.path}")
        except ServiceError as err:
            self._send_error(err)


def make_server(host: str = "127.0.0.1", port: int = 0,
                max_n: int | None = None, quiet: bool = True) -> ThreadingHTTPServer:
    """Build a ready-to-serve HTTP server; port 0 picks a free port."""
    service = ExplorerService(max_n=max_n)
    handler = type("BoundHandler", (_Handler,), {"service": service, "quiet": quiet})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server


def serve(host: str = "127.0.0.1", port: int = 8765,
          max_n: int | None = None) -> None:
    """Run the explorer service until interrupted."""
    server = make_server(host=host, port=port, max_n=max_n, quiet=False)
    host_shown, port_shown = server.server_address[:2]
    print(f"explorer service listening on http://{host_shown}:{port_shown}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
