"""JSON-over-HTTP service exposing the workbench to the UI.

Sessions hold a seed and, for type A quivers, the mirrored cluster-tilting
object; a mutation updates both under one lock so the correspondence is
always visible.  All polynomial values are sent as canonical strings plus a
fraction-style display string; the client performs no algebra.
"""

from __future__ import annotations

import threading
import uuid
import json as jsonlib

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .arquiver import knit
from .charcat import CTObject, cc_table, ct_mutate, index_vector, initial_ct
from .clusteralg import Seed, initial_seed, mutate_seed
from .errors import (
    ClusterCharError,
    HasLoop,
    HasTwoCycle,
    InputError,
    NotDivisible,
    NotInTable,
    NotTypeA,
)
from .fpoly import f_polynomial
from .grassmann import grass_table
from .laurent import LaurentPoly
from .quivers import Quiver, linear_an, validate_mutable
from .reps import Representation, interval_module, underlying_path_graph


def _variable_payload(value: LaurentPoly) -> dict:
    return {"canonical": value.to_str(), "display": value.fraction_str()}


class Session:
    def __init__(self, sid: str, quiver: Quiver):
        self.id = sid
        self.initial_quiver = quiver
        self.history: list = []
        self.seed: Seed = initial_seed(quiver)
        self.is_type_a = underlying_path_graph(quiver)
        self.ct: CTObject | None = initial_ct(quiver) if self.is_type_a else None
        self.table = cc_table(quiver) if self.is_type_a else None
        self.lock = threading.Lock()

    def mutate(self, vertex: int) -> None:
        """Apply the exchange on the seed and, when present, the categorical
        mirror, atomically: either both advance or neither does."""
        with self.lock:
            new_seed = mutate_seed(self.seed, vertex)
            new_ct = ct_mutate(self.ct, vertex, self.table) if self.ct is not None else None
            self.seed = new_seed
            self.ct = new_ct
            self.history.append(vertex)

    def payload(self) -> dict:
        doc = {
            "id": self.id,
            "history": list(self.history),
            "seed": {
                "quiver": self.seed.quiver.to_json(),
                "cluster": [_variable_payload(u) for u in self.seed.cluster],
            },
            "ct": None,
        }
        if self.ct is not None:
            doc["ct"] = {
                "quiver": self.ct.quiver.to_json(),
                "summands": [
                    {
                        "label": x.label(),
                        "name": x.name(),
                        "cc": _variable_payload(self.table.value(x)),
                        "index": list(index_vector(self.initial_quiver, x)),
                    }
                    for x in self.ct.summands
                ],
            }
        return doc


def create_app(quiver: Quiver | None = None) -> FastAPI:
    base_quiver = quiver if quiver is not None else linear_an(4)
    validate_mutable(base_quiver)
    app = FastAPI(title="clusterchar")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict = {}

    def _error(status: int, exc: Exception) -> JSONResponse:
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.exception_handler(ClusterCharError)
    async def _domain_error(_request, exc: ClusterCharError):
        if isinstance(exc, (NotDivisible, NotInTable)):
            return _error(409, exc)
        return _error(400, exc)

    def _get_session(sid: str) -> Session:
        if sid not in sessions:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        return sessions[sid]

    @app.get("/quiver")
    def get_quiver():
        return base_quiver.to_json()

    @app.post("/session")
    def create_session(body: dict | None = None):
        if body and "quiver" in body:
            q = Quiver.from_json(body["quiver"])
        elif body and "n" in body:
            q = Quiver.from_json(body)
        else:
            q = base_quiver
        try:
            validate_mutable(q)
        except (HasLoop, HasTwoCycle) as exc:
            raise InputError(str(exc)) from exc
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = Session(sid, q)
        return sessions[sid].payload()

    @app.get("/session/{sid}")
    def get_session(sid: str):
        return _get_session(sid).payload()

    @app.post("/session/{sid}/mutate")
    def mutate_session(sid: str, body: dict):
        session = _get_session(sid)
        if "vertex" not in body:
            raise InputError("body must contain a 'vertex'")
        vertex = int(body["vertex"])
        if not 1 <= vertex <= session.seed.quiver.n:
            raise InputError(f"vertex {vertex} out of range 1..{session.seed.quiver.n}")
        session.mutate(vertex)
        doc = session.payload()
        doc["vertex"] = vertex
        doc["variable"] = doc["seed"]["cluster"][vertex - 1]
        return doc

    @app.get("/session/{sid}/snapshot")
    def snapshot(sid: str):
        session = _get_session(sid)
        return {"quiver": session.initial_quiver.to_json(), "history": list(session.history)}

    @app.post("/session/import")
    def import_session(body: dict):
        if "quiver" not in body:
            raise InputError("snapshot must contain a 'quiver'")
        q = Quiver.from_json(body["quiver"])
        sid = uuid.uuid4().hex[:12]
        session = Session(sid, q)
        for vertex in body.get("history", []):
            session.mutate(int(vertex))
        sessions[sid] = session
        return session.payload()

    @app.get("/ar-quiver")
    def ar_quiver():
        if not underlying_path_graph(base_quiver):
            raise NotTypeA("the base quiver is not of type A")
        return knit(base_quiver).to_json()

    @app.get("/cc-table")
    def cc_table_endpoint():
        if not underlying_path_graph(base_quiver):
            raise NotTypeA("the base quiver is not of type A")
        table = cc_table(base_quiver)
        entries = []
        for obj in table.objects:
            entry = {
                "label": obj.label(),
                "name": obj.name(),
                "index": list(index_vector(base_quiver, obj)),
                "cc": _variable_payload(table.value(obj)),
            }
            if obj.is_module:
                m = interval_module(base_quiver, *obj.interval)
                entry["fpoly"] = f_polynomial(m).to_str()
                # the client passes this straight back to /grassmannian
                entry["rep"] = m.to_json()
            else:
                entry["fpoly"] = "1"
                entry["rep"] = None
            entries.append(entry)
        return {"entries": entries}

    @app.get("/grassmannian")
    def grassmannian(rep: str = Query(..., description="representation JSON, URL-encoded")):
        try:
            doc = jsonlib.loads(rep)
        except jsonlib.JSONDecodeError as exc:
            raise InputError(f"rep parameter is not valid JSON: {exc}") from exc
        v = Representation.from_json(doc)
        table = grass_table(v)
        return {
            "dims": list(v.dims),
            "table": [{"e": list(e), "chi": chi} for e, chi in table.items()],
            "fpoly": f_polynomial(v).to_str(),
        }

    return app
