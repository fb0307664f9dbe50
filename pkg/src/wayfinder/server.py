"""HTTP JSON API hosting workbench sessions.

Sessions live in an in-memory store; an optional snapshot file preserves them
across a clean shutdown. Mutating requests on one session serialize through a
per-session lock, while reads and distinct sessions proceed concurrently.

Endpoints (shapes documented in the README):

    POST /sessions                {graph, origin}        201 {id, state}
    GET  /sessions/{id}                                  200 {state}
    POST /sessions/{id}/moves     {move}                 200 {verdict, state}
    GET  /sessions/{id}/solution                         200 {table, tree}
    GET  /graphs/fixtures                                200 {fixtures}

Errors use {"error": {"code", "message"}} bodies with the codes
UNKNOWN_SESSION (404), BAD_MOVE (400), PARSE_ERROR (400), UNKNOWN_NODE (400),
SESSION_DONE (409), BAD_REQUEST (400), INTERNAL (500).
"""

from __future__ import annotations

import json
import threading
from pathlib import Path as FsPath

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import (
    GraphError,
    MalformedMove,
    ParseError,
    SessionDone,
    UnknownNode,
    UnknownSession,
    ValidationError,
    WayfinderError,
)
from .fixtures import all_fixtures
from .graph import Graph, parse_edge_list
from .mapkit import city_to_graph, parse_city_map
from .render import label_table_json, spanning_tree_json
from .session import (
    Session,
    graph_from_json_dict,
    move_from_json_dict,
    reveal_solution,
    session_from_json_dict,
    session_to_json_dict,
    start_session,
)


class ApiError(Exception):
    """Carries one documented error code plus its HTTP status."""

    def __init__(self, code: str, message: str, status: int) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


def _api_error_from(exc: Exception) -> ApiError:
    if isinstance(exc, UnknownSession):
        return ApiError("UNKNOWN_SESSION", str(exc), 404)
    if isinstance(exc, MalformedMove):
        return ApiError("BAD_MOVE", str(exc), 400)
    if isinstance(exc, SessionDone):
        return ApiError("SESSION_DONE", str(exc), 409)
    if isinstance(exc, (ParseError, ValidationError)):
        return ApiError("PARSE_ERROR", str(exc), 400)
    if isinstance(exc, UnknownNode):
        return ApiError("UNKNOWN_NODE", str(exc), 400)
    if isinstance(exc, (GraphError, WayfinderError)):
        return ApiError("BAD_REQUEST", str(exc), 400)
    return ApiError("INTERNAL", str(exc), 500)


class SessionStore:
    """Thread-safe id -> Session map with per-session mutation locks."""

    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session with id {session_id!r}")
        return session

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            lock = self._locks.get(session_id)
        if lock is None:
            raise UnknownSession(f"no session with id {session_id!r}")
        return lock

    def snapshot(self, path: FsPath) -> None:
        with self._registry_lock:
            sessions = list(self._sessions.values())
        payload = [session_to_json_dict(s) for s in sessions]
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")

    def restore(self, path: FsPath) -> int:
        payload = json.loads(path.read_text(encoding="utf-8"))
        for entry in payload:
            self.add(session_from_json_dict(entry))
        return len(payload)


def _graph_from_request(spec) -> Graph:
    """Accept either inline edge-list text or an embedded JSON document."""
    if isinstance(spec, str):
        return parse_edge_list(spec)
    if isinstance(spec, dict):
        if "streets" in spec:
            return city_to_graph(parse_city_map(json.dumps(spec)))
        return graph_from_json_dict(spec)
    raise ParseError("'graph' must be edge-list text or an embedded JSON object")


def create_app(
    store: SessionStore | None = None,
    snapshot_path: str | None = None,
    frontend_dir: str | None = None,
) -> FastAPI:
    store = store or SessionStore()
    app = FastAPI(title="wayfinder", docs_url=None, redoc_url=None)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_bad_body(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "PARSE_ERROR", "message": "request body is not valid JSON"}},
        )

    @app.on_event("startup")
    def load_snapshot() -> None:
        if snapshot_path and FsPath(snapshot_path).exists():
            store.restore(FsPath(snapshot_path))

    @app.on_event("shutdown")
    def save_snapshot() -> None:
        if snapshot_path:
            store.snapshot(FsPath(snapshot_path))

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        try:
            graph_spec = payload.get("graph")
            origin = payload.get("origin")
            if graph_spec is None or not isinstance(origin, str):
                raise ParseError("body must carry 'graph' and a string 'origin'")
            graph = _graph_from_request(graph_spec)
            session = start_session(graph, origin)
        except WayfinderError as exc:
            raise _api_error_from(exc) from exc
        store.add(session)
        return {"id": session.id, "state": session_to_json_dict(session)}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        try:
            session = store.get(session_id)
        except WayfinderError as exc:
            raise _api_error_from(exc) from exc
        return {"state": session_to_json_dict(session)}

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, payload: dict = Body(...)):
        try:
            session = store.get(session_id)
            lock = store.lock_for(session_id)
            move = move_from_json_dict(payload.get("move"))
            with lock:
                verdict = session.submit(move)
        except WayfinderError as exc:
            raise _api_error_from(exc) from exc
        return {"verdict": verdict.to_json_dict(), "state": session_to_json_dict(session)}

    @app.get("/sessions/{session_id}/solution")
    def get_solution(session_id: str):
        try:
            session = store.get(session_id)
        except WayfinderError as exc:
            raise _api_error_from(exc) from exc
        table, tree = reveal_solution(session)
        return {"table": label_table_json(table), "tree": spanning_tree_json(tree)}

    @app.get("/graphs/fixtures")
    def get_fixtures():
        return {"fixtures": [fx.to_json_dict() for fx in all_fixtures()]}

    if frontend_dir and FsPath(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="workbench")

    return app


def serve(port: int, host: str = "127.0.0.1", snapshot_path: str | None = None, frontend_dir: str | None = None) -> None:
    import uvicorn

    app = create_app(snapshot_path=snapshot_path, frontend_dir=frontend_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
