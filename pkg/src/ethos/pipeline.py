"""Staged run directories: ingest through report, resumable.

A run directory holds every artifact one audit produces. Stages read the
artifacts of earlier stages and write their own; manifest.json records a
fingerprint per completed stage (inputs plus the config slice the stage
cares about), so re-invoking a run skips work whose inputs have not moved
and re-executes everything downstream of a change.

Reports are rendered without timestamps or machine identifiers: two runs
over the same inputs and config produce byte-identical report files.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import alignment as al
from . import coherence as coh
from . import corpus as cp
from . import lda
from . import records as rec
from . import sentiment as snt
from . import stores, textprep
from .config import EthosConfig
from .errors import ConfigError, EmptyCorpus, MissingArtifacts, StageFailed

STAGES = ("ingest", "prep", "corpus", "sweep", "train", "align", "sentiment", "report")

ARTIFACTS = {
    "ingest": ("reviews.jsonl",),
    "prep": ("clean.jsonl", "stats.json"),
    "corpus": ("vocab.json", "corpus.bow"),
    "sweep": ("coherence.csv",),
    "train": ("model.json", "theta.bin", "topics.json"),
    "align": ("alignments.json", "decisions.jsonl"),
    "sentiment": ("sentiments.jsonl",),
    "report": (),  # report_formats decides the file list
}

# stage -> artifacts of earlier stages hashed into its fingerprint
STAGE_INPUTS = {
    "ingest": (),
    "prep": ("reviews.jsonl",),
    "corpus": ("clean.jsonl",),
    "sweep": ("clean.jsonl", "vocab.json", "corpus.bow"),
    "train": ("clean.jsonl", "vocab.json", "corpus.bow", "coherence.csv"),
    "align": ("topics.json",),
    "sentiment": ("reviews.jsonl", "clean.jsonl", "model.json", "theta.bin", "alignments.json", "decisions.jsonl"),
    "report": ("stats.json", "coherence.csv", "topics.json", "alignments.json", "decisions.jsonl", "sentiments.jsonl", "model.json"),
}

# stage -> config fields that should invalidate its memo when changed
STAGE_CONFIG = {
    "ingest": ("country", "max_pages"),
    "prep": ("min_words", "english_only", "dedupe", "readability_floor"),
    "corpus": ("phrase_min_count", "phrase_threshold", "phrase_passes", "min_doc_freq", "max_doc_fraction"),
    "sweep": ("sweep_k_values", "window_size", "top_words", "alpha", "beta", "passes", "burn_in", "sample_lag", "seed",
              "phrase_min_count", "phrase_threshold", "phrase_passes"),
    "train": ("k", "alpha", "beta", "passes", "burn_in", "sample_lag", "seed", "top_words", "tau_doc",
              "window_size", "phrase_min_count", "phrase_threshold", "phrase_passes"),
    "align": ("threshold", "embed_provider", "embed_url", "top_words"),
    "sentiment": ("absa_provider", "absa_url", "tau_doc", "threshold"),
    "report": ("report_formats", "figures", "top_words"),
}


def sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


# ---------------------------------------------------------------- manifest


@dataclass
class RunManifest:
    run_id: str
    created_at: str
    config_snapshot: dict
    input_hashes: dict = field(default_factory=dict)
    stage_status: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "created_at": self.created_at,
            "config_snapshot": self.config_snapshot,
            "input_hashes": self.input_hashes,
            "stage_status": self.stage_status,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunManifest":
        return cls(
            run_id=d["run_id"],
            created_at=d["created_at"],
            config_snapshot=d.get("config_snapshot", {}),
            input_hashes=d.get("input_hashes", {}),
            stage_status=d.get("stage_status", {}),
        )


class Run:
    """One run directory plus its config and manifest."""

    def __init__(self, run_dir: str | Path, cfg: EthosConfig | None = None):
        self.dir = Path(run_dir)
        self.cfg = cfg if cfg is not None else EthosConfig()
        manifest_path = self.dir / "manifest.json"
        if manifest_path.exists():
            self.manifest = RunManifest.from_dict(json.loads(manifest_path.read_text(encoding="utf-8")))
            self.manifest.config_snapshot = self.cfg.snapshot()
        else:
            self.manifest = RunManifest(
                run_id=self.dir.name,
                created_at=rec.now_iso(),
                config_snapshot=self.cfg.snapshot(),
            )

    def path(self, name: str) -> Path:
        return self.dir / name

    def save_manifest(self) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(self.manifest.to_dict(), indent=2, sort_keys=True) + "\n"
        self.path("manifest.json").write_text(payload, encoding="utf-8")

    # --- memoization ---

    def fingerprint(self, stage: str) -> str:
        parts: dict = {"config": {}, "inputs": {}}
        snapshot = self.cfg.snapshot()
        for key in STAGE_CONFIG[stage]:
            parts["config"][key] = snapshot[key]
        for name in STAGE_INPUTS[stage]:
            p = self.path(name)
            if not p.exists():
                raise MissingArtifacts(f"stage '{stage}' needs {name}, run earlier stages first")
            parts["inputs"][name] = sha256_file(p)
        if stage == "ingest":
            parts["inputs"] = dict(self.manifest.input_hashes)
        return hashlib.sha256(json.dumps(parts, sort_keys=True).encode("utf-8")).hexdigest()

    def is_current(self, stage: str) -> bool:
        status = self.manifest.stage_status.get(stage)
        if not status or status.get("state") != "done":
            return False
        outputs = ARTIFACTS[stage] if stage != "report" else tuple(
            f"report.{fmt}" for fmt in self.cfg.report_formats
        )
        if any(not self.path(name).exists() for name in outputs):
            return False
        try:
            return status.get("fingerprint") == self.fingerprint(stage)
        except MissingArtifacts:
            return False

    def mark(self, stage: str, state: str) -> None:
        entry = {"state": state}
        if state == "done":
            entry["fingerprint"] = self.fingerprint(stage)
        self.manifest.stage_status[stage] = entry
        self.save_manifest()


# ---------------------------------------------------------------- loaders

def _read_jsonl(path: Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def _write_jsonl(path: Path, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")


def load_kept_reviews(run: Run) -> list[rec.ReviewRecord]:
    """Records from reviews.jsonl that survive the configured filters."""
    rows = _read_jsonl(run.path("reviews.jsonl"))
    recs = [rec.make_record(r, fetched_at=r.get("fetched_at")) for r in rows]
    res = rec.filter_reviews(recs, _filter_cfg(run.cfg))
    return res.kept


def load_clean_docs(run: Run) -> list[textprep.CleanDocument]:
    rows = _read_jsonl(run.path("clean.jsonl"))
    return [
        textprep.CleanDocument(
            review_id=r["review_id"], text=r["text"], tokens=r["tokens"], lemmas=r["lemmas"]
        )
        for r in rows
    ]


def merged_lemmas(run: Run, docs: list[textprep.CleanDocument]) -> list[list[str]]:
    cfg = run.cfg
    return cp.detect_phrases(
        [d.lemmas for d in docs],
        min_count=cfg.phrase_min_count,
        threshold=cfg.phrase_threshold,
        passes=cfg.phrase_passes,
    )


def _filter_cfg(cfg: EthosConfig) -> rec.FilterConfig:
    return rec.FilterConfig(
        min_words=cfg.min_words,
        english_only=cfg.english_only,
        dedupe=cfg.dedupe,
        readability_floor=cfg.readability_floor,
    )


def _lda_cfg(cfg: EthosConfig, k: int) -> lda.LdaConfig:
    return lda.LdaConfig(
        k=k,
        alpha=cfg.effective_alpha(k),
        beta=cfg.beta,
        passes=cfg.passes,
        burn_in=cfg.burn_in,
        sample_lag=cfg.sample_lag,
        seed=cfg.seed,
    )


def load_topics(run: Run) -> list[lda.TopicSummary]:
    payload = json.loads(run.path("topics.json").read_text(encoding="utf-8"))
    return [
        lda.TopicSummary(
            topic_id=t["topic_id"],
            top_terms=[(w, float(p)) for w, p in t["top_terms"]],
            review_count=t["review_count"],
        )
        for t in payload
    ]


def decision_state(run: Run) -> al.DecisionOutcome:
    """Alignments with the decision log replayed on top."""
    alignments = al.load_alignments(run.path("alignments.json"))
    decisions = al.load_decisions(run.path("decisions.jsonl"))
    taxonomy = al.default_taxonomy(include_emergent=False)
    return al.apply_decisions(alignments, decisions, taxonomy)


def trained_k(run: Run) -> int:
    if run.cfg.k > 0:
        return run.cfg.k
    curve = coh.load_curve(run.path("coherence.csv"))
    return curve.best_k


# ---------------------------------------------------------------- stages


def stage_ingest(run: Run, inputs: list[str] | None = None, apps: list[str] | None = None,
                 store: str = "") -> int:
    """Collect reviews from files and/or a store feed into reviews.jsonl.

    File rows keep their recorded fetched_at so re-running a directory
    stays stable; live fetches stamp the current time.
    """
    out: list[rec.ReviewRecord] = []
    hashes: dict = {}
    for path_text in inputs or []:
        p = Path(path_text)
        if not p.exists():
            raise ConfigError(f"input file not found: {p}")
        hashes[str(p)] = sha256_file(p)
        rows = _read_jsonl(p)
        for row in rows:
            out.append(rec.make_record(row, fetched_at=row.get("fetched_at")))
    for app_id in apps or []:
        fetched = stores.fetch_reviews(store, app_id, run.cfg.country, run.cfg.max_pages)
        hashes[f"{store}:{app_id}"] = hashlib.sha256(
            json.dumps([r.to_dict() for r in fetched], sort_keys=True).encode("utf-8")
        ).hexdigest()
        out.extend(fetched)
    if not out:
        raise EmptyCorpus("ingest produced no reviews")
    run.manifest.input_hashes = hashes
    _write_jsonl(run.path("reviews.jsonl"), [r.to_dict() for r in out])
    return len(out)


def stage_prep(run: Run) -> dict:
    """Filter reviews and write cleaned token streams plus corpus stats."""
    rows = _read_jsonl(run.path("reviews.jsonl"))
    recs = [rec.make_record(r, fetched_at=r.get("fetched_at")) for r in rows]
    res = rec.filter_reviews(recs, _filter_cfg(run.cfg))
    if not res.kept:
        raise EmptyCorpus("no reviews survive filtering")
    docs = [textprep.prepare(r.id, r.text) for r in res.kept]
    _write_jsonl(
        run.path("clean.jsonl"),
        [
            {"review_id": d.review_id, "text": d.text, "tokens": d.tokens, "lemmas": d.lemmas}
            for d in docs
        ],
    )
    stats = {
        "filter": {
            "input": len(recs),
            "kept": len(res.kept),
            "rejected": dict(sorted(res.rejected.items())),
        },
        "reviews": textprep.corpus_stats([r.text for r in res.kept]).to_dict(),
        "apps": dict(sorted(_count_by(res.kept, lambda r: r.app_id).items())),
        "stores": dict(sorted(_count_by(res.kept, lambda r: r.store).items())),
    }
    run.path("stats.json").write_text(json.dumps(stats, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return stats


def _count_by(items, key) -> dict:
    out: dict = {}
    for item in items:
        out[key(item)] = out.get(key(item), 0) + 1
    return out


def stage_corpus(run: Run) -> int:
    docs = load_clean_docs(run)
    merged = merged_lemmas(run, docs)
    vocab = cp.build_vocabulary(
        merged, min_doc_freq=run.cfg.min_doc_freq, max_doc_fraction=run.cfg.max_doc_fraction
    )
    bows = [cp.to_bow(d.review_id, toks, vocab) for d, toks in zip(docs, merged)]
    cp.save_vocabulary(vocab, run.path("vocab.json"))
    cp.save_bow(bows, run.path("corpus.bow"))
    return len(vocab)


def stage_sweep(run: Run) -> coh.CoherenceCurve:
    docs = load_clean_docs(run)
    merged = merged_lemmas(run, docs)
    vocab = cp.load_vocabulary(run.path("vocab.json"))
    bows = cp.load_bow(run.path("corpus.bow"))
    counts = coh.window_counts(merged, window_size=run.cfg.window_size)
    base = _lda_cfg(run.cfg, max(run.cfg.sweep_k_values))
    curve = coh.sweep_k(
        bows,
        vocab,
        counts,
        list(run.cfg.sweep_k_values),
        base,
        top_n=run.cfg.top_words,
        auto_alpha=run.cfg.alpha == 0,
    )
    coh.save_curve(curve, run.path("coherence.csv"))
    return curve


def stage_train(run: Run) -> int:
    vocab = cp.load_vocabulary(run.path("vocab.json"))
    bows = cp.load_bow(run.path("corpus.bow"))
    k = trained_k(run)
    model = lda.train_lda(bows, vocab, _lda_cfg(run.cfg, k))
    lda.save_model(model, run.path("model.json"))
    lda.save_theta(model.theta, run.path("theta.bin"))
    assignments = lda.assign_topics(model, tau_doc=run.cfg.tau_doc)
    topics = [
        lda.summarize_topic(model, t, vocab, n=run.cfg.top_words, assignments=assignments)
        for t in range(k)
    ]
    docs = load_clean_docs(run)
    counts = coh.window_counts(merged_lemmas(run, docs), window_size=run.cfg.window_size)
    scores = coh.per_topic_coherence(model, vocab, counts, top_n=run.cfg.top_words)
    payload = [
        {
            "topic_id": t.topic_id,
            "top_terms": [[w, round(p, 6)] for w, p in t.top_terms],
            "review_count": t.review_count,
            "coherence": round(scores[t.topic_id], 6),
        }
        for t in topics
    ]
    run.path("topics.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return k


def stage_align(run: Run) -> list[al.AlignmentResult]:
    topics = load_topics(run)
    taxonomy = al.default_taxonomy(include_emergent=False)
    provider = al.make_provider(run.cfg.embed_provider, run.cfg.embed_url)
    alignments = al.align_topics(topics, taxonomy, provider, threshold=run.cfg.threshold)
    al.save_alignments(alignments, run.path("alignments.json"))
    # the decision log is append-only and survives re-alignment
    run.path("decisions.jsonl").touch()
    return alignments


def scored_reviews(run: Run) -> list[tuple[str, str]]:
    """(review_id, raw text) for every review in the trained corpus."""
    kept = {r.id: r for r in load_kept_reviews(run)}
    docs = load_clean_docs(run)
    return [(d.review_id, kept[d.review_id].text) for d in docs if d.review_id in kept]


def assignments_from_artifacts(run: Run) -> list[lda.TopicAssignment]:
    model = lda.load_model(run.path("model.json"))
    model.theta = lda.load_theta(run.path("theta.bin"))
    return lda.assign_topics(model, tau_doc=run.cfg.tau_doc, doc_ids=model.doc_ids)


def stage_sentiment(run: Run) -> list[snt.AspectSentiment]:
    outcome = decision_state(run)
    principles = {p.id: p for p in al.default_taxonomy(include_emergent=False)}
    for p in outcome.overlay:
        principles[p.id] = p
    provider = snt.make_provider(run.cfg.absa_provider, run.cfg.absa_url)
    reviews = scored_reviews(run)
    assignments = assignments_from_artifacts(run)
    sentiments = snt.score_reviews(reviews, assignments, outcome.mapping, principles, provider)
    snt.save_sentiments(sentiments, run.path("sentiments.jsonl"))
    return sentiments


def stage_report(run: Run) -> list[Path]:
    from . import report as rpt  # deferred: pulls in matplotlib when figures are on

    return rpt.render(run)


_STAGE_FNS = {
    "ingest": stage_ingest,
    "prep": stage_prep,
    "corpus": stage_corpus,
    "sweep": stage_sweep,
    "train": stage_train,
    "align": stage_align,
    "sentiment": stage_sentiment,
    "report": stage_report,
}


def run_stage(run: Run, stage: str, force: bool = False, **kwargs):
    """Execute one stage with memoization and failure bookkeeping."""
    if stage not in _STAGE_FNS:
        raise ConfigError(f"unknown stage {stage!r}")
    run.dir.mkdir(parents=True, exist_ok=True)
    if not force and stage != "ingest" and run.is_current(stage):
        return None
    try:
        result = _STAGE_FNS[stage](run, **kwargs)
    except (StageFailed, ConfigError):
        # usage problems are the caller's to fix, not stage failures
        raise
    except Exception as exc:
        run.manifest.stage_status[stage] = {"state": "failed", "error": str(exc)}
        run.save_manifest()
        raise StageFailed(stage, exc) from exc
    run.mark(stage, "done")
    return result


def ingest_current(run: Run, inputs: list[str] | None, apps: list[str] | None) -> bool:
    """True when reviews.jsonl already reflects exactly these input files.

    Live store fetches are never considered current; only file sources can
    be skipped by hash.
    """
    if apps or not inputs or not run.path("reviews.jsonl").exists():
        return False
    status = run.manifest.stage_status.get("ingest")
    if not status or status.get("state") != "done":
        return False
    try:
        candidate = {str(Path(p)): sha256_file(Path(p)) for p in inputs}
    except OSError:
        return False
    return candidate == run.manifest.input_hashes


def run_all(run: Run, inputs: list[str] | None = None, apps: list[str] | None = None,
            store: str = "", force: bool = False) -> dict[str, str]:
    """ingest (only when sources are given or reviews.jsonl is missing),
    then every remaining stage in order.

    Returns stage -> "done" | "skipped" for this invocation.
    """
    outcome: dict[str, str] = {}
    if inputs or apps:
        if force or not ingest_current(run, inputs, apps):
            run_stage(run, "ingest", force=force, inputs=inputs, apps=apps, store=store)
            outcome["ingest"] = "done"
        else:
            outcome["ingest"] = "skipped"
    elif not run.path("reviews.jsonl").exists():
        raise ConfigError("no reviews.jsonl in run directory and no --input/--app given")
    for stage in STAGES[1:]:
        ran = run_stage(run, stage, force=force)
        outcome[stage] = "skipped" if ran is None and not force else "done"
    return outcome
