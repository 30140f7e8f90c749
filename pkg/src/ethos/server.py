"""REST console over a run directory.

Read endpoints serve the run's artifacts; the one write endpoint appends
an alignment decision to the append-only log and re-derives the mapped
ethics and report files before returning. Artifacts are re-read whenever
the files behind them change, so a run re-executed from the CLI shows up
without restarting the server.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, RedirectResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import alignment as al
from . import lda
from . import report as rpt
from .errors import (
    DuplicateId,
    EthosError,
    MissingArtifacts,
    TopicOutOfRange,
    UnknownLabel,
    UnknownTopic,
)
from .pipeline import Run, decision_state, run_stage, scored_reviews

DECISION_ACTIONS = ("accept", "reject", "relabel", "promote_emergent")

# error class -> (status, code in the error body)
_ERROR_MAP = {
    UnknownTopic: (404, "unknown_topic"),
    TopicOutOfRange: (404, "topic_out_of_range"),
    MissingArtifacts: (409, "missing_artifacts"),
    UnknownLabel: (400, "unknown_label"),
    DuplicateId: (409, "duplicate_id"),
}


class DecisionRequest(BaseModel):
    action: str
    label: str | dict | None = None
    note: str | None = None


class _Cache:
    """One value per name, keyed by the stat signature of the files behind it."""

    def __init__(self, run: Run):
        self.run = run
        self._slots: dict[str, tuple[tuple, object]] = {}
        self.lock = threading.Lock()

    def stamp(self, names: tuple[str, ...]) -> tuple:
        out = []
        for name in names:
            p = self.run.path(name)
            try:
                st = p.stat()
                out.append((name, st.st_mtime_ns, st.st_size))
            except FileNotFoundError:
                out.append((name, None, None))
        return tuple(out)

    def get(self, key: str, deps: tuple[str, ...], loader):
        stamp = self.stamp(deps)
        with self.lock:
            hit = self._slots.get(key)
            if hit and hit[0] == stamp:
                return hit[1]
        value = loader()
        with self.lock:
            self._slots[key] = (stamp, value)
        return value


def _require(run: Run, *names: str) -> None:
    missing = [n for n in names if not run.path(n).exists()]
    if missing:
        raise MissingArtifacts(f"run directory lacks {', '.join(missing)}")


def _load_json(path: Path):
    return json.loads(path.read_text(encoding="utf-8"))


def _theta_table(run: Run):
    """(doc_ids, theta matrix, review texts by id) for the trained model."""
    model = lda.load_model(run.path("model.json"))
    model.theta = lda.load_theta(run.path("theta.bin"))
    texts = dict(scored_reviews(run))
    return model.doc_ids, model.theta, texts


def _alignment_state(run: Run) -> dict:
    outcome = decision_state(run)
    return {
        "alignments": [a.to_dict() for a in outcome.alignments],
        "mapping": {str(tid): pid for tid, pid in sorted(outcome.mapping.items())},
        "pending": list(outcome.pending),
        "overlay": [
            {"id": p.id, "label": p.label, "definition": p.definition, "source": p.source}
            for p in outcome.overlay
        ],
    }


def _ui_dir() -> Path | None:
    override = os.environ.get("ETHOS_UI_DIR")
    if override:
        p = Path(override)
        return p if p.is_dir() else None
    p = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return p if p.is_dir() else None


def create_app(run: Run) -> FastAPI:
    _require(run, "topics.json", "alignments.json")
    app = FastAPI(title="ethos audit server", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    cache = _Cache(run)
    decisions_lock = threading.Lock()

    @app.exception_handler(EthosError)
    async def ethos_error(_: Request, exc: EthosError):
        status, code = 500, "internal_error"
        for cls, (st, cd) in _ERROR_MAP.items():
            if isinstance(exc, cls):
                status, code = st, cd
                break
        return JSONResponse({"error": code, "message": str(exc)}, status_code=status)

    @app.exception_handler(RequestValidationError)
    async def invalid_request(_: Request, exc: RequestValidationError):
        return JSONResponse({"error": "invalid_request", "message": str(exc)}, status_code=400)

    @app.get("/api/stats")
    def stats():
        _require(run, "stats.json")
        return cache.get("stats", ("stats.json",), lambda: _load_json(run.path("stats.json")))

    @app.get("/api/topics")
    def topics():
        return cache.get("topics", ("topics.json",), lambda: _load_json(run.path("topics.json")))

    @app.get("/api/topics/{topic_id}/reviews")
    def topic_reviews(topic_id: int, limit: int = 20):
        _require(run, "model.json", "theta.bin", "reviews.jsonl", "clean.jsonl")
        doc_ids, theta, texts = cache.get(
            "theta", ("model.json", "theta.bin", "reviews.jsonl", "clean.jsonl"), lambda: _theta_table(run)
        )
        if not 0 <= topic_id < theta.shape[1]:
            raise TopicOutOfRange(f"topic {topic_id} not in 0..{theta.shape[1] - 1}")
        weights = theta[:, topic_id]
        order = sorted(range(len(doc_ids)), key=lambda d: (-weights[d], doc_ids[d]))
        items = []
        for d in order:
            if weights[d] < run.cfg.tau_doc:
                break
            items.append(
                {
                    "review_id": doc_ids[d],
                    "text": texts.get(doc_ids[d], ""),
                    "theta": round(float(weights[d]), 6),
                }
            )
            if len(items) >= max(0, limit):
                break
        return items

    @app.get("/api/alignments")
    def alignments():
        return cache.get(
            "alignments", ("alignments.json", "decisions.jsonl"), lambda: _alignment_state(run)
        )

    @app.get("/api/coherence")
    def coherence():
        _require(run, "coherence.csv")

        def load():
            from . import coherence as coh

            curve = coh.load_curve(run.path("coherence.csv"))
            return {"points": [[k, round(cv, 6)] for k, cv in curve.points], "best_k": curve.best_k}

        return cache.get("coherence", ("coherence.csv",), load)

    def report_dict() -> dict:
        deps = (
            "stats.json",
            "coherence.csv",
            "topics.json",
            "alignments.json",
            "decisions.jsonl",
            "sentiments.jsonl",
            "model.json",
        )
        return cache.get("report", deps, lambda: rpt.build(run))

    @app.get("/api/ethics")
    def ethics():
        return report_dict()["ethics"]

    @app.get("/api/report")
    def report():
        return report_dict()

    @app.post("/api/alignments/{topic_id}/decision")
    def decide(topic_id: int, body: DecisionRequest):
        if body.action not in DECISION_ACTIONS:
            return JSONResponse(
                {
                    "error": "invalid_action",
                    "message": f"action must be one of {', '.join(DECISION_ACTIONS)}",
                },
                status_code=400,
            )
        decision = {"topic_id": topic_id, "action": body.action}
        if body.label is not None:
            decision["label"] = body.label
        if body.note is not None:
            decision["note"] = body.note
        with decisions_lock:
            # dry-run the full log with the new entry before committing it
            alignments = al.load_alignments(run.path("alignments.json"))
            log = al.load_decisions(run.path("decisions.jsonl"))
            taxonomy = al.default_taxonomy(include_emergent=False)
            al.apply_decisions(alignments, log + [decision], taxonomy)
            al.append_decision(run.path("decisions.jsonl"), decision)
            # bring the mapped ethics and report files up to date
            run_stage(run, "sentiment")
            run_stage(run, "report")
        return _alignment_state(run)

    ui = _ui_dir()
    if ui is not None:
        app.mount("/ui", StaticFiles(directory=ui, html=True), name="ui")

        @app.get("/")
        def index():
            return RedirectResponse("/ui/")

    return app


def serve(run: Run) -> None:
    import uvicorn

    app = create_app(run)
    try:
        uvicorn.run(app, host=run.cfg.host, port=run.cfg.port, log_level="warning")
    except OSError as exc:
        raise EthosError(f"cannot bind {run.cfg.host}:{run.cfg.port}: {exc}") from exc
