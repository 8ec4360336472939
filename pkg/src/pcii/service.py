"""Session-based elicitation API.

An assessor submits pairwise judgments one at a time; the service keeps
the growing comparison set, recomputes inconsistency over every fully
filled triad, flags the governing triad, and proposes the repair that
zeroes it (replace the long edge y with x*z).

Wire protocol: JSON over HTTP.  All payload numbers travel as decimal
strings produced by repr(), which round-trip to the same double.

    POST   /sessions                       {entities: [...], indicator: "kii"} -> {id}
    GET    /sessions/{id}                  session state + current report
    PUT    /sessions/{id}/comparisons      {i: label, j: label, ratio} -> report
    GET    /sessions/{id}/report
    GET    /sessions/{id}/export?format=csv|json
    DELETE /sessions/{id}

Only indicators whose range stays in [0, 1] may drive a session: the
client gauge has a fixed scale, and the eigenvalue-based index is
rejected outright.
"""

from __future__ import annotations

import itertools
import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import numpy as np

from . import matio
from .errors import (
    DuplicateLabelError,
    IncompleteSessionError,
    NonConformingIndicatorError,
    NonPositiveRatioError,
    PcError,
    TooFewEntitiesError,
    UnknownLabelError,
    UnknownSessionError,
)
from .indicators import evaluate_triad_list, get_indicator
from .matrix import ENTRY_MAX, ENTRY_MIN, PCMatrix

RATIO_MIN = ENTRY_MIN
RATIO_MAX = ENTRY_MAX


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Session:
    """One assessor's elicitation state; comparison keys are 0-based (i < j)."""

    id: str
    entities: tuple[str, ...]
    indicator: str
    comparisons: dict[tuple[int, int], float] = field(default_factory=dict)
    created: str = field(default_factory=_now)
    updated: str = field(default_factory=_now)

    @property
    def n(self) -> int:
        return len(self.entities)

    @property
    def complete(self) -> bool:
        return len(self.comparisons) == self.n * (self.n - 1) // 2

    def to_doc(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "entities": list(self.entities),
            "indicator": self.indicator,
            "created": self.created,
            "updated": self.updated,
            "comparisons": [
                {"i": i + 1, "j": j + 1, "ratio": repr(r)}
                for (i, j), r in sorted(self.comparisons.items())
            ],
        }

    @classmethod
    def from_doc(cls, doc: dict[str, Any]) -> "Session":
        comparisons = {
            (c["i"] - 1, c["j"] - 1): float(c["ratio"]) for c in doc["comparisons"]
        }
        return cls(
            id=doc["id"],
            entities=tuple(doc["entities"]),
            indicator=doc["indicator"],
            comparisons=comparisons,
            created=doc["created"],
            updated=doc["updated"],
        )


def build_report(session: Session) -> dict[str, Any]:
    """Inconsistency report over the fully filled triads of a session."""
    labels = session.entities
    pairs = session.comparisons
    filled: list[tuple[tuple[int, int, int], tuple[float, float, float]]] = []
    for i, j, k in itertools.combinations(range(session.n), 3):
        if (i, j) in pairs and (i, k) in pairs and (j, k) in pairs:
            filled.append(((i, j, k), (pairs[(i, j)], pairs[(i, k)], pairs[(j, k)])))
    report: dict[str, Any] = {
        "complete": session.complete,
        "value": None,
        "worst_triad": None,
        "suggested_repair": None,
        "per_triad": [],
    }
    if not filled:
        return report
    value, pos, kernels = evaluate_triad_list(session.indicator, [v for _, v in filled])
    report["value"] = repr(value)
    report["per_triad"] = [
        {
            "triad": [i + 1, j + 1, k + 1],
            "labels": [labels[i], labels[j], labels[k]],
            "values": [repr(x), repr(y), repr(z)],
            "kernel": repr(kern),
        }
        for ((i, j, k), (x, y, z)), kern in zip(filled, kernels)
    ]
    (i, j, k), (x, y, z) = filled[pos]
    report["worst_triad"] = {
        "triad": [i + 1, j + 1, k + 1],
        "labels": [labels[i], labels[j], labels[k]],
        "values": [repr(x), repr(y), repr(z)],
    }
    if value > 0.0:
        report["suggested_repair"] = {
            "position": [labels[i], labels[k]],
            "current": repr(y),
            "proposed": repr(x * z),
        }
    return report


def session_matrix(session: Session) -> PCMatrix:
    """The full reciprocal matrix of a complete session."""
    if not session.complete:
        raise IncompleteSessionError(
            f"session has {len(session.comparisons)} of "
            f"{session.n * (session.n - 1) // 2} comparisons"
        )
    n = session.n
    M = np.ones((n, n))
    for (i, j), r in session.comparisons.items():
        M[i, j] = r
        M[j, i] = 1.0 / r
    return PCMatrix(M)


class SessionStore:
    """In-memory session map with one JSON document per session on disk."""

    def __init__(self, state_dir: str | Path | None = None):
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._dir = Path(state_dir) if state_dir else None
        if self._dir is not None:
            self._dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self._dir.glob("*.json")):
                doc = json.loads(path.read_text())
                self._sessions[doc["id"]] = Session.from_doc(doc)

    def _persist(self, session: Session) -> None:
        if self._dir is None:
            return
        path = self._dir / f"{session.id}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(session.to_doc(), sort_keys=True))
        tmp.replace(path)

    def create(self, entities: list[str], indicator: str = "kii") -> Session:
        labels = [str(e) for e in entities]
        if len(labels) < 3:
            raise TooFewEntitiesError(f"need at least 3 entities, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise DuplicateLabelError(f"entity labels must be distinct: {labels}")
        ind = get_indicator(indicator)
        if not ind.normalized or ind.kernel is None:
            raise NonConformingIndicatorError(
                f"indicator {ind.id} is not usable for elicitation: "
                "the gauge needs a triad-based indicator with values in [0, 1]"
            )
        session = Session(id=secrets.token_hex(8), entities=tuple(labels), indicator=ind.id)
        with self._lock:
            self._sessions[session.id] = session
            self._persist(session)
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSessionError(f"no session {session_id!r}") from None

    def submit(self, session_id: str, label_i: str, label_j: str, ratio: float) -> Session:
        with self._lock:
            session = self.get(session_id)
            try:
                i = session.entities.index(label_i)
                j = session.entities.index(label_j)
            except ValueError as exc:
                raise UnknownLabelError(str(exc)) from None
            if i == j:
                raise UnknownLabelError(f"labels must be distinct, got {label_i!r} twice")
            if not (RATIO_MIN < ratio < RATIO_MAX):
                raise NonPositiveRatioError(f"ratio {ratio!r} outside ({RATIO_MIN}, {RATIO_MAX})")
            if i > j:
                i, j = j, i
                ratio = 1.0 / ratio
            session.comparisons[(i, j)] = float(ratio)
            session.updated = _now()
            self._persist(session)
            return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            self.get(session_id)
            del self._sessions[session_id]
            if self._dir is not None:
                (self._dir / f"{session_id}.json").unlink(missing_ok=True)


def _parse_ratio(raw: Any) -> float:
    if isinstance(raw, bool) or raw is None:
        raise NonPositiveRatioError(f"ratio {raw!r} is not a number")
    try:
        value = matio.parse_cell(raw)
    except ValueError:
        raise NonPositiveRatioError(f"cannot parse ratio {raw!r}") from None
    return value


def create_app(state_dir: str | Path | None = None):
    from fastapi import FastAPI
    from fastapi.middleware.cors import CORSMiddleware
    from fastapi.responses import JSONResponse, PlainTextResponse

    store = SessionStore(state_dir)
    app = FastAPI(title="pcii elicitation service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store

    @app.exception_handler(PcError)
    async def _pc_error(_, exc: PcError):
        status = 404 if isinstance(exc, UnknownSessionError) else 400
        name = type(exc).__name__.removesuffix("Error")
        return JSONResponse({"error": name, "detail": str(exc)}, status_code=status)

    def _session_doc(session: Session) -> dict[str, Any]:
        doc = session.to_doc()
        doc["report"] = build_report(session)
        return doc

    @app.post("/sessions", status_code=201)
    async def create_session(payload: dict):
        entities = payload.get("entities") or []
        indicator = payload.get("indicator") or "kii"
        session = store.create(entities, indicator)
        return {"id": session.id}

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        return _session_doc(store.get(session_id))

    @app.put("/sessions/{session_id}/comparisons")
    async def put_comparison(session_id: str, payload: dict):
        for key in ("i", "j", "ratio"):
            if key not in payload:
                raise NonPositiveRatioError(f"missing field {key!r}")
        ratio = _parse_ratio(payload["ratio"])
        session = store.submit(session_id, str(payload["i"]), str(payload["j"]), ratio)
        return build_report(session)

    @app.get("/sessions/{session_id}/report")
    async def get_report(session_id: str):
        return build_report(store.get(session_id))

    @app.get("/sessions/{session_id}/export")
    async def export_session(session_id: str, format: str = "csv"):
        session = store.get(session_id)
        A = session_matrix(session)
        if format == "json":
            return JSONResponse(json.loads(matio.dumps_json(A)))
        if format == "csv":
            return PlainTextResponse(matio.dumps_csv(A), media_type="text/csv")
        raise NonPositiveRatioError(f"unknown export format {format!r}")

    @app.delete("/sessions/{session_id}")
    async def delete_session(session_id: str):
        store.delete(session_id)
        return {"deleted": True}

    return app
