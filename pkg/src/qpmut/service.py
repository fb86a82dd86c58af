"""Local HTTP session service exposing the mutation pipeline.

Sessions are held in memory, one lock per session, no persistence;
export is the durability mechanism.  Responses are pure functions of
the session state and the request, so replaying a history reproduces
identical states.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from . import example_names, load_example
from .core import format_poly
from .cuts import classify_vertex, cut_from_grading, truncated_jacobian, validate_cut
from .errors import ParseError, QPError
from .mutation import MutationStep, mutate, premutate, split
from .potential import GradedQP
from .qpdoc import emit_dot, emit_qp, parse_qp, poly_terms_json
from .tilting import DEFAULT_BOUND


class ArrowModel(BaseModel):
    name: str
    source: str
    target: str
    degree: int = 0


class TermModel(BaseModel):
    coefficient: str
    start: str
    arrows: list[str]


class RelationModel(BaseModel):
    name: str
    terms: list[TermModel]
    text: str


class StateModel(BaseModel):
    vertices: list[str]
    arrows: list[ArrowModel]
    potential: list[TermModel]
    potential_text: str
    cut: list[str]
    cut_valid: bool
    has_cut: bool
    classifications: dict[str, str]
    relations: list[RelationModel]
    declared_degree: int | None = None


class SessionModel(BaseModel):
    id: str
    state: StateModel
    history_length: int


class CreateSessionRequest(BaseModel):
    document: str


class StepRequest(BaseModel):
    vertex: str
    side: str = Field(default="left", pattern="^(left|right)$")
    allow_nonstrict: bool = False


class StepResponse(BaseModel):
    id: str
    state: StateModel
    history_length: int
    applied: dict
    cut_preserved: bool
    warning: str | None = None


@dataclass
class Session:
    id: str
    current: GradedQP
    cut: frozenset[str] | None
    history: list[tuple[dict, GradedQP, frozenset[str] | None]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


_sessions: dict[str, Session] = {}
_sessions_lock = threading.Lock()

app = FastAPI(title="qpmut explorer service")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _state_model(g: GradedQP, cut: frozenset[str] | None) -> StateModel:
    effective = cut if cut is not None else frozenset()
    report = validate_cut(g, effective)
    classifications = {
        v: classify_vertex(g, effective, v) for v in g.quiver.vertices}
    relations: list[RelationModel] = []
    if report.valid:
        try:
            pres = truncated_jacobian(g, effective)
            relations = [
                RelationModel(name=r.name,
                              terms=[TermModel(**t) for t in poly_terms_json(r.poly)],
                              text=format_poly(r.poly))
                for r in pres.relations]
        except QPError:
            relations = []
    ordered_cut = [a.name for a in g.quiver.arrows if a.name in effective]
    return StateModel(
        vertices=list(g.quiver.vertices),
        arrows=[ArrowModel(name=a.name, source=a.source, target=a.target,
                           degree=a.degree) for a in g.quiver.arrows],
        potential=[TermModel(**t) for t in poly_terms_json(g.potential)],
        potential_text=format_poly(g.potential),
        cut=ordered_cut,
        cut_valid=report.valid,
        has_cut=cut is not None,
        classifications=classifications,
        relations=relations,
        declared_degree=g.declared_degree,
    )


def _get_session(session_id: str) -> Session:
    with _sessions_lock:
        session = _sessions.get(session_id)
    if session is None:
        raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
    return session


@app.get("/examples")
def list_examples() -> dict:
    return {"examples": example_names()}


@app.get("/examples/{name}", response_class=PlainTextResponse)
def get_example(name: str) -> str:
    try:
        return load_example(name)
    except QPError as exc:
        raise HTTPException(status_code=404, detail=str(exc))


@app.post("/sessions", response_model=SessionModel)
def create_session(request: CreateSessionRequest) -> SessionModel:
    try:
        qp, cut = parse_qp(request.document)
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except QPError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    session = Session(secrets.token_hex(8), qp, cut)
    with _sessions_lock:
        _sessions[session.id] = session
    return SessionModel(id=session.id, state=_state_model(qp, cut),
                        history_length=0)


@app.get("/sessions/{session_id}", response_model=SessionModel)
def get_session(session_id: str) -> SessionModel:
    session = _get_session(session_id)
    with session.lock:
        return SessionModel(id=session.id,
                            state=_state_model(session.current, session.cut),
                            history_length=len(session.history))


@app.post("/sessions/{session_id}/steps", response_model=StepResponse)
def apply_step(session_id: str, step: StepRequest) -> StepResponse:
    session = _get_session(session_id)
    with session.lock:
        g, cut = session.current, session.cut
        if step.vertex not in g.quiver.vertices:
            raise HTTPException(status_code=409,
                                detail={"reason": f"unknown vertex {step.vertex!r}"})
        effective = cut if cut is not None else frozenset()
        kind = classify_vertex(g, effective, step.vertex)
        wanted = "strict_source" if step.side == "left" else "strict_sink"
        warning = None
        cut_preserved = True
        try:
            if kind == wanted and cut is not None:
                new = mutate(g, MutationStep(step.vertex, step.side),
                             bound=DEFAULT_BOUND)
                new_cut: frozenset[str] | None = cut_from_grading(new)
            elif kind == wanted:
                # no cut on this document: the classification is against the
                # empty set, so apply the ungraded mutation
                pre = premutate(g, step.vertex, "ungraded")
                new = split(pre, DEFAULT_BOUND).reduced
                new_cut = None
            elif step.allow_nonstrict:
                pre = premutate(g, step.vertex, "ungraded")
                new = split(pre, DEFAULT_BOUND).reduced
                new_cut = None
                cut_preserved = False
                warning = (f"vertex {step.vertex!r} is classified {kind!r}; applied an "
                           f"ungraded mutation, the cut and its guarantees are lost")
            else:
                raise HTTPException(
                    status_code=409,
                    detail={"reason": f"vertex {step.vertex!r} is classified {kind!r}, "
                                      f"but a {step.side} step needs a {wanted}",
                            "classification": kind})
        except QPError as exc:
            raise HTTPException(status_code=409,
                                detail={"reason": str(exc), "classification": kind})
        applied = {"vertex": step.vertex, "side": step.side,
                   "nonstrict": kind != wanted}
        session.history.append((applied, g, cut))
        session.current, session.cut = new, new_cut
        return StepResponse(id=session.id, state=_state_model(new, new_cut),
                            history_length=len(session.history),
                            applied=applied, cut_preserved=cut_preserved,
                            warning=warning)


@app.post("/sessions/{session_id}/undo", response_model=SessionModel)
def undo(session_id: str) -> SessionModel:
    session = _get_session(session_id)
    with session.lock:
        if not session.history:
            raise HTTPException(status_code=409, detail={"reason": "nothing to undo"})
        _, prior, prior_cut = session.history.pop()
        session.current, session.cut = prior, prior_cut
        return SessionModel(id=session.id,
                            state=_state_model(session.current, session.cut),
                            history_length=len(session.history))


@app.get("/sessions/{session_id}/export")
def export(session_id: str, format: str = "qp"):
    session = _get_session(session_id)
    with session.lock:
        g, cut = session.current, session.cut
        if format == "qp":
            return PlainTextResponse(emit_qp(g, cut))
        if format == "dot":
            return PlainTextResponse(emit_dot(g, cut))
        if format == "json":
            return _state_model(g, cut).model_dump()
    raise HTTPException(status_code=422, detail=f"unknown export format {format!r}")
