"""JSON service exposing exploration sessions for remote clients.

Endpoints:

    POST   /sessions                 create a session (optional graph6 core)
    GET    /sessions/{id}            current state snapshot
    POST   /sessions/{id}/commands   apply one command line
    DELETE /sessions/{id}            drop the session

Command errors come back in-band as diagnostics with the state unchanged;
unknown session ids are 404, malformed bodies 400-class (422 via
validation).  Commands to one session are serialized by a per-session
lock; state snapshots are plain data, safe to read concurrently.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .graphs import Graph6Error, parse_graph6
from .session import CommandError, Session


class CreateSessionRequest(BaseModel):
    core_g6: str | None = Field(default=None, description="optional graph6 core")


class CommandRequest(BaseModel):
    line: str = Field(description="one command line, e.g. 'a 0 1 2'")


class FamilyRequest(BaseModel):
    tag: str = Field(description="one of G1, G2, G3, G4, DOB")
    n: int = 0
    m: int = 0
    k: int = 0


class PathModel(BaseModel):
    u: int
    v: int
    s: int


class FlagsModel(BaseModel):
    ti: bool
    mti: bool
    iti: bool


class TransmissionsModel(BaseModel):
    core: list[int]
    arcs: list[list[int]]


class SessionState(BaseModel):
    id: str
    closed: bool
    core_n: int
    core_edges: list[tuple[int, int]]
    paths: list[PathModel]
    connected: bool
    transmissions: TransmissionsModel | None
    flags: FlagsModel | None
    spectrum: str | None
    rendered: list[str]
    diagnostics: list[str] = []


class _Store:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict[str, tuple[Session, threading.Lock]] = {}

    def create(self, core_g6: str | None) -> Session:
        core = None
        if core_g6:
            try:
                core = parse_graph6(core_g6.strip())
            except Graph6Error as exc:
                raise HTTPException(status_code=400, detail=f"bad graph6 core: {exc}")
        session = Session(uuid.uuid4().hex, core)
        with self._lock:
            self._sessions[session.id] = (session, threading.Lock())
        return session

    def get(self, session_id: str) -> tuple[Session, threading.Lock]:
        with self._lock:
            entry = self._sessions.get(session_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no session {session_id}")
        return entry

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise HTTPException(status_code=404, detail=f"no session {session_id}")
            del self._sessions[session_id]


def snapshot(session: Session, diagnostics: list[str] | None = None) -> SessionState:
    rendered = session.rendered
    transmissions = None
    flags = None
    spectrum = None
    if rendered.profile is not None:
        n = session.core.n
        core_values = [rendered.profile[v] for v in range(n)]
        arcs = []
        offset = n
        for p in session.paths:
            arcs.append([rendered.profile[offset + i] for i in range(p.s)])
            offset += p.s
        transmissions = TransmissionsModel(core=core_values, arcs=arcs)
        spec = rendered.spectrum
        flags = FlagsModel(ti=spec.is_ti, mti=spec.is_mti, iti=spec.is_iti)
        spectrum = rendered.spectrum_text
    return SessionState(
        id=session.id,
        closed=session.closed,
        core_n=session.core.n,
        core_edges=session.core.edges(),
        paths=[PathModel(u=p.u, v=p.v, s=p.s) for p in session.paths],
        connected=rendered.connected,
        transmissions=transmissions,
        flags=flags,
        spectrum=spectrum,
        rendered=list(rendered.lines),
        diagnostics=diagnostics or [],
    )


def create_app() -> FastAPI:
    app = FastAPI(title="trgraph session service", version="0.1.0")
    store = _Store()

    @app.post("/sessions", response_model=SessionState, status_code=201)
    def create_session(request: CreateSessionRequest) -> SessionState:
        session = store.create(request.core_g6)
        return snapshot(session)

    @app.get("/sessions/{session_id}", response_model=SessionState)
    def get_session(session_id: str) -> SessionState:
        session, lock = store.get(session_id)
        with lock:                      # a consistent workspace/profile pair
            return snapshot(session)

    @app.post("/sessions/{session_id}/commands", response_model=SessionState)
    def post_command(session_id: str, request: CommandRequest) -> SessionState:
        session, lock = store.get(session_id)
        with lock:
            try:
                session.apply_line(request.line)
            except CommandError as exc:
                return snapshot(session, diagnostics=[str(exc)])
            return snapshot(session)

    @app.post("/sessions/{session_id}/family", response_model=SessionState)
    def load_family(session_id: str, request: FamilyRequest) -> SessionState:
        from .families import FamilySpec, build

        session, lock = store.get(session_id)
        with lock:
            try:
                spec = FamilySpec(request.tag.upper(), n=request.n, m=request.m, k=request.k)
            except ValueError as exc:
                return snapshot(session, diagnostics=[str(exc)])
            session.load_workspace(
                build(spec), note=f"<family {spec.tag} n={spec.n} m={spec.m} k={spec.k}>"
            )
            return snapshot(session)

    @app.delete("/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str) -> None:
        store.delete(session_id)

    return app


app = create_app()


def serve(host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port)
