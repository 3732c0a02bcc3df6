"""JSON-over-HTTP session service for the interactive explorer.

A session wraps one chain-seed over a chosen sequence and window.  Two layers
are kept side by side: the reference seed, which only ever changes through
box moves (so its variables are always the chain's KR classes), and the
working seed, which additionally absorbs free cluster mutations the user
triggers by clicking exchangeable vertices.  A position's KR label is shown
only while its working variable still equals the reference one.

History is the list of accepted operations; undo pops the last one and
replays the rest from the initial state, which keeps replay determinism an
invariant instead of a promise.

Endpoints (all JSON):

    POST /session                     {type, seq?, range?, chain?} -> state
    GET  /session/<id>                -> state
    POST /session/<id>/mutate         {k}  (chain position)
    POST /session/<id>/boxmove        {s}
    POST /session/<id>/undo
    GET  /session/<id>/quiver         ?format=json|dot
    GET  /session/<id>/variables      -> per-position labels and expansions

Errors come back as {error, detail} with status 400/404/409.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from iboxes.chains import canonical_chain, classify_move, movable_positions, parse_chain, t_path
from iboxes.cluster import mutate_seed
from iboxes.laurent import NonLaurentDivisionError
from iboxes.quivers import Quiver, export_dot
from iboxes.roots import UnsupportedTypeError
from iboxes.sequences import AdmissibleSequence, canonical_sequence, staircase_sequence
from iboxes.tsystems import canonical_box_seed, kr_label, transport


class SessionError(Exception):
    def __init__(self, status: int, detail: str):
        super().__init__(detail)
        self.status = status
        self.detail = detail


def _resolve_sequence(config: dict) -> AdmissibleSequence:
    tag = config.get("type")
    if not tag:
        raise SessionError(400, "missing affine type")
    seq_spec = config.get("seq", "default")
    try:
        if seq_spec == "default":
            return staircase_sequence(tag)
        if seq_spec == "bipartite":
            return canonical_sequence(tag)
        if isinstance(seq_spec, dict):
            payload = dict(seq_spec)
            payload.setdefault("type", tag)
            return AdmissibleSequence.from_json(payload)
    except UnsupportedTypeError as exc:
        raise SessionError(400, str(exc)) from exc
    except (KeyError, ValueError) as exc:
        raise SessionError(400, f"bad sequence spec: {exc}") from exc
    raise SessionError(400, f"bad sequence spec {seq_spec!r}")


class Session:
    """One explorer session; all mutation goes through apply()/undo()."""

    def __init__(self, sid: str, config: dict):
        self.id = sid
        self.config = config
        self.lock = threading.Lock()
        self.seq = _resolve_sequence(config)

        chain_spec = config.get("chain")
        rng = config.get("range")
        if chain_spec:
            try:
                chain = (
                    parse_chain(self.seq, chain_spec)
                    if isinstance(chain_spec, str)
                    else parse_chain(self.seq, f"{chain_spec['a']}:{chain_spec['code']}")
                )
            except (KeyError, ValueError) as exc:
                raise SessionError(400, f"bad chain: {exc}") from exc
            if rng and tuple(rng) != chain.range:
                raise SessionError(400, f"range {rng} contradicts the chain's {chain.range}")
        elif rng:
            try:
                lo, hi = int(rng[0]), int(rng[1])
                chain = canonical_chain(self.seq, lo, hi)
            except (ValueError, TypeError, IndexError) as exc:
                raise SessionError(400, f"bad range: {exc}") from exc
        else:
            raise SessionError(400, "need a chain or a range")

        self.initial_chain = chain
        self.history: list[dict] = []
        self._rebuild()

    # -- state reconstruction

    def _rebuild(self) -> None:
        lo, hi = self.initial_chain.range
        ref = canonical_box_seed(self.seq, lo, hi)
        ref = transport(ref, t_path(ref.chain, self.initial_chain))
        work = ref.seed
        for op in self.history:
            if op["op"] == "mutate":
                box = ref.chain.box(op["k"])
                work = mutate_seed(work, box)
            else:
                s = op["s"]
                move = classify_move(ref.chain, s)
                if move.is_tsystem:
                    old = ref.chain.box(s)
                    ref = transport(ref, [s])
                    new = ref.chain.box(s)
                    work = mutate_seed(work, old).rename({old: new})
                else:
                    ref = transport(ref, [s])
        self.ref = ref
        self.work = work

    # -- operations

    def apply(self, op: dict) -> None:
        chain = self.ref.chain
        if op["op"] == "mutate":
            k = op.get("k")
            if not isinstance(k, int) or not 1 <= k <= len(chain):
                raise SessionError(400, f"position k={k!r} out of range")
            box = chain.box(k)
            if box not in set(self.work.exchangeable):
                raise SessionError(409, "frozen vertex")
            try:
                self.work = mutate_seed(self.work, box)
            except NonLaurentDivisionError as exc:  # pragma: no cover
                raise SessionError(409, str(exc)) from exc
        elif op["op"] == "boxmove":
            s = op.get("s")
            if not isinstance(s, int):
                raise SessionError(400, "missing move position s")
            try:
                move = classify_move(chain, s)
            except ValueError as exc:
                raise SessionError(409, str(exc)) from exc
            if move.is_tsystem:
                old = chain.box(s)
                self.ref = transport(self.ref, [s])
                new = self.ref.chain.box(s)
                self.work = mutate_seed(self.work, old).rename({old: new})
            else:
                self.ref = transport(self.ref, [s])
        else:
            raise SessionError(400, f"unknown op {op['op']!r}")
        self.history.append(op)

    def undo(self) -> None:
        if not self.history:
            raise SessionError(409, "nothing to undo")
        self.history.pop()
        self._rebuild()

    # -- views

    def _positions(self) -> list[dict]:
        chain = self.ref.chain
        out = []
        names = self.ref.variable_names()
        frozen = self.ref.frozen_boxes
        for k in range(1, len(chain) + 1):
            box = chain.box(k)
            work_var = self.work.variables[box]
            clean = work_var == self.ref.seed.variables[box]
            out.append(
                {
                    "index": k,
                    "box": [box.a, box.b],
                    "color": self.seq.i(box.a),
                    "level": self.seq.p(box.a),
                    "frozen": box in frozen,
                    "kr": str(kr_label(self.seq, box)) if clean else None,
                    "laurent": work_var.format(names),
                }
            )
        return out

    def quiver(self) -> Quiver:
        chain = self.ref.chain
        index_of = {chain.box(k): k for k in range(1, len(chain) + 1)}
        bmat = self.work.bmat
        arrows = []
        # b_{ij} > 0 means b_{ij} arrows i -> j; entries with a frozen column
        # are only stored transposed, so fold those in by skew-extension
        for (i, j), v in sorted(bmat.entries.items(), key=repr):
            if v > 0:
                arrows.extend([(index_of[i], index_of[j])] * v)
            elif (j, i) not in bmat.entries:
                arrows.extend([(index_of[j], index_of[i])] * (-v))
        return Quiver(tuple(range(1, len(chain) + 1)), tuple(sorted(arrows)))

    def state(self) -> dict:
        chain = self.ref.chain
        return {
            "id": self.id,
            "type": self.seq.datum.affine_tag,
            "range": list(chain.range),
            "chain": chain.to_json(),
            "movable": [
                {"s": s, "kind": move.kind} for s, move in movable_positions(chain)
            ],
            "positions": self._positions(),
            "b": [
                [
                    [i.a, i.b],
                    [j.a, j.b],
                    v,
                ]
                for (i, j), v in sorted(self.work.bmat.entries.items(), key=repr)
            ],
            "history": list(self.history),
        }

    def variables(self) -> list[dict]:
        return [
            {"index": p["index"], "box": p["box"], "kr": p["kr"], "laurent": p["laurent"]}
            for p in self._positions()
        ]


class SessionStore:
    """In-memory store with optional JSON-file persistence of configs+history."""

    def __init__(self, state_file: str | None = None):
        self.lock = threading.Lock()
        self.sessions: dict[str, Session] = {}
        self.state_file = state_file
        if state_file and os.path.exists(state_file):
            with open(state_file) as fh:
                saved = json.load(fh)
            for sid, entry in saved.items():
                session = Session(sid, entry["config"])
                for op in entry["history"]:
                    session.apply(op)
                self.sessions[sid] = session

    def _persist(self) -> None:
        if not self.state_file:
            return
        payload = {
            sid: {"config": s.config, "history": s.history}
            for sid, s in self.sessions.items()
        }
        tmp = self.state_file + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, self.state_file)

    def create(self, config: dict) -> Session:
        session = Session(uuid.uuid4().hex[:12], config)
        with self.lock:
            self.sessions[session.id] = session
            self._persist()
        return session

    def get(self, sid: str) -> Session:
        with self.lock:
            session = self.sessions.get(sid)
        if session is None:
            raise SessionError(404, f"unknown session {sid}")
        return session

    def persist(self) -> None:
        with self.lock:
            self._persist()


_ROUTES = [
    ("POST", re.compile(r"^/session$"), "create"),
    ("GET", re.compile(r"^/session/(?P<sid>\w+)$"), "state"),
    ("POST", re.compile(r"^/session/(?P<sid>\w+)/mutate$"), "mutate"),
    ("POST", re.compile(r"^/session/(?P<sid>\w+)/boxmove$"), "boxmove"),
    ("POST", re.compile(r"^/session/(?P<sid>\w+)/undo$"), "undo"),
    ("GET", re.compile(r"^/session/(?P<sid>\w+)/quiver$"), "quiver"),
    ("GET", re.compile(r"^/session/(?P<sid>\w+)/variables$"), "variables"),
]


def make_handler(store: SessionStore, webroot: str | None = None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):  # quiet by default
            pass

        def _send(self, status: int, payload, content_type="application/json"):
            body = (
                payload.encode()
                if isinstance(payload, str)
                else json.dumps(payload).encode()
            )
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            if not length:
                return {}
            try:
                return json.loads(self.rfile.read(length))
            except json.JSONDecodeError as exc:
                raise SessionError(400, f"bad JSON body: {exc}") from exc

        def _dispatch(self, method: str) -> None:
            path, _, query = self.path.partition("?")
            try:
                for want, pattern, action in _ROUTES:
                    match = pattern.match(path)
                    if match and want == method:
                        getattr(self, f"_do_{action}")(match.groupdict(), query)
                        return
                if method == "GET" and webroot is not None:
                    self._do_static(path)
                    return
                raise SessionError(404, f"no route for {method} {path}")
            except SessionError as exc:
                self._send(exc.status, {"error": "request failed", "detail": exc.detail})

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        # -- actions

        def _do_create(self, _groups, _query):
            session = store.create(self._body())
            store.persist()
            self._send(200, session.state())

        def _do_state(self, groups, _query):
            session = store.get(groups["sid"])
            with session.lock:
                self._send(200, session.state())

        def _apply(self, sid: str, op: dict):
            session = store.get(sid)
            with session.lock:
                session.apply(op)
                state = session.state()
            store.persist()
            self._send(200, state)

        def _do_mutate(self, groups, _query):
            body = self._body()
            self._apply(groups["sid"], {"op": "mutate", "k": body.get("k")})

        def _do_boxmove(self, groups, _query):
            body = self._body()
            self._apply(groups["sid"], {"op": "boxmove", "s": body.get("s")})

        def _do_undo(self, groups, _query):
            session = store.get(groups["sid"])
            with session.lock:
                session.undo()
                state = session.state()
            store.persist()
            self._send(200, state)

        def _do_quiver(self, groups, query):
            session = store.get(groups["sid"])
            with session.lock:
                quiver = session.quiver()
                if "dot" in query:
                    chain = session.ref.chain
                    text = export_dot(quiver, label=lambda k: str(chain.box(k)))
                    self._send(200, text, content_type="text/vnd.graphviz")
                else:
                    self._send(200, quiver.to_json())

        def _do_variables(self, groups, _query):
            session = store.get(groups["sid"])
            with session.lock:
                self._send(200, session.variables())

        def _do_static(self, path: str):
            name = "index.html" if path in ("/", "") else path.lstrip("/")
            full = os.path.normpath(os.path.join(webroot, name))
            if not full.startswith(os.path.abspath(webroot)) or not os.path.isfile(full):
                raise SessionError(404, f"no such file {name}")
            ctype = {
                ".html": "text/html",
                ".js": "text/javascript",
                ".css": "text/css",
            }.get(os.path.splitext(full)[1], "application/octet-stream")
            with open(full, "rb") as fh:
                self._send(200, fh.read().decode(), content_type=ctype)

    return Handler


def serve(port: int, bind: str = "127.0.0.1", state_file: str | None = None,
          webroot: str | None = None) -> ThreadingHTTPServer:
    """Build (but do not run) the HTTP server; caller invokes serve_forever()."""
    store = SessionStore(state_file)
    if webroot is not None:
        webroot = os.path.abspath(webroot)
    server = ThreadingHTTPServer((bind, port), make_handler(store, webroot))
    return server
