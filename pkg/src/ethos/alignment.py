"""Mapping discovered topics onto an ethics taxonomy by embedding similarity.

A topic is rendered as the space-joined text of its top terms, embedded,
and scored by cosine against every principle's definition. The best match
is kept when it reaches the threshold; anything below is flagged emergent
and queued for human review. Review decisions live in an append-only
JSONL log; replaying the log always reproduces the same final mapping.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import data, stores
from .errors import (
    DimensionMismatch,
    DuplicateId,
    EmptyText,
    NetworkError,
    NoKnownWords,
    ProviderError,
    SchemaError,
    UnknownLabel,
    UnknownTopic,
    ZeroVector,
)
from .lda import TopicSummary
from .textprep import clean_text

DEFAULT_THRESHOLD = 0.5


# ---------------------------------------------------------------- taxonomy


@dataclass(frozen=True)
class EthicsPrinciple:
    id: str
    label: str
    definition: str
    source: str  # "known" or "emergent"
    framework_refs: tuple[str, ...] = ()


def _parse_principles(entries, origin: str) -> list[EthicsPrinciple]:
    if not isinstance(entries, list) or not entries:
        raise SchemaError(f"{origin}: expected a non-empty list of principles")
    seen = set()
    out = []
    for entry in entries:
        if not isinstance(entry, dict):
            raise SchemaError(f"{origin}: principle entries must be objects")
        pid = entry.get("id")
        definition = entry.get("definition")
        source = entry.get("source")
        if not pid or not isinstance(pid, str):
            raise SchemaError(f"{origin}: principle without an id")
        if pid in seen:
            raise DuplicateId(f"{origin}: duplicate principle id {pid!r}")
        seen.add(pid)
        if not definition or not isinstance(definition, str):
            raise SchemaError(f"{origin}: principle {pid!r} has no definition")
        if source not in ("known", "emergent"):
            raise SchemaError(f"{origin}: principle {pid!r} has bad source {source!r}")
        out.append(
            EthicsPrinciple(
                id=pid,
                label=entry.get("label", pid),
                definition=definition,
                source=source,
                framework_refs=tuple(entry.get("framework_refs", ())),
            )
        )
    return out


def load_taxonomy(path: str | Path) -> list[EthicsPrinciple]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        entries = json.loads(text)
    except ValueError as exc:
        raise SchemaError(f"{path}: not valid JSON") from exc
    return _parse_principles(entries, str(path))


def default_taxonomy(include_emergent: bool = False) -> list[EthicsPrinciple]:
    """The bundled known principles, optionally with the emergent overlay."""
    out = _parse_principles(json.loads(data.taxonomy_text("taxonomy.json")), "taxonomy.json")
    if include_emergent:
        out += _parse_principles(
            json.loads(data.taxonomy_text("taxonomy_emergent.json")), "taxonomy_emergent.json"
        )
    return out


# ---------------------------------------------------------------- embedding


@dataclass(frozen=True)
class EmbeddingVector:
    values: tuple[float, ...]
    dim: int
    provider_id: str

    def __post_init__(self):
        if len(self.values) != self.dim:
            raise DimensionMismatch(f"{len(self.values)} values for dim {self.dim}")


class StaticVectors:
    """Deterministic bundled word-vector table; text vector = mean of words.

    Words absent from the table are skipped; text whose every word is
    unknown cannot be embedded.
    """

    provider_id = "static-vectors"

    def __init__(self):
        self._table: dict[str, np.ndarray] = {}
        dim = 0
        for line in data.vectors_text().splitlines():
            if not line or line.startswith("#"):
                continue
            word, rest = line.split("\t", 1)
            vec = np.array(rest.split(), dtype=np.float64)
            self._table[word] = vec
            dim = vec.shape[0]
        self.dim = dim

    def word_vector(self, word: str) -> np.ndarray | None:
        return self._table.get(word)

    def _tokens(self, text: str) -> list[str]:
        if not text.strip():
            raise EmptyText("cannot embed empty text")
        return clean_text(text).split()

    def embed(self, text: str) -> EmbeddingVector:
        vectors = [self._table[t] for t in self._tokens(text) if t in self._table]
        if not vectors:
            raise NoKnownWords(f"no known words in {text!r}")
        mean = np.mean(vectors, axis=0)
        return EmbeddingVector(tuple(float(x) for x in mean), self.dim, self.provider_id)

    def embed_weighted(self, terms: list[tuple[str, float]]) -> EmbeddingVector:
        """Weighted mean over term vectors; unknown terms are skipped."""
        total = np.zeros(self.dim)
        weight_sum = 0.0
        for term, weight in terms:
            for word in term.replace("_", " ").split():
                vec = self._table.get(word)
                if vec is not None:
                    total += weight * vec
                    weight_sum += weight
        if weight_sum == 0.0:
            raise NoKnownWords("no known words in weighted terms")
        mean = total / weight_sum
        return EmbeddingVector(tuple(float(x) for x in mean), self.dim, self.provider_id)


class HttpInference:
    """Remote embedding endpoint speaking POST {"text": ...} -> {"vector", "dim"}."""

    provider_id = "http-inference"

    def __init__(self, url: str):
        if not url:
            raise ProviderError("http-inference needs a URL")
        self.url = url.rstrip("/") + "/embed"

    def embed(self, text: str) -> EmbeddingVector:
        if not text.strip():
            raise EmptyText("cannot embed empty text")
        try:
            body = stores.http_post_json(self.url, {"text": text})
        except NetworkError as exc:
            raise ProviderError(str(exc)) from exc
        if not isinstance(body, dict) or "vector" not in body or "dim" not in body:
            raise ProviderError(f"malformed embed response from {self.url}")
        values = tuple(float(x) for x in body["vector"])
        if len(values) != int(body["dim"]):
            raise ProviderError("embed response vector length disagrees with dim")
        return EmbeddingVector(values, int(body["dim"]), self.provider_id)


def make_provider(name: str, url: str = ""):
    if name == "static":
        return StaticVectors()
    if name == "http":
        return HttpInference(url)
    raise ProviderError(f"unknown embedding provider {name!r}")


def similarity(a: EmbeddingVector, b: EmbeddingVector) -> float:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims differ: {a.dim} vs {b.dim}")
    va = np.asarray(a.values)
    vb = np.asarray(b.values)
    na = float(np.linalg.norm(va))
    nb = float(np.linalg.norm(vb))
    if na == 0.0 or nb == 0.0:
        raise ZeroVector("cosine undefined for an all-zero vector")
    value = float(va @ vb) / (na * nb)
    return max(-1.0, min(1.0, value))


# ---------------------------------------------------------------- alignment


@dataclass
class AlignmentResult:
    topic_id: int
    scores: dict[str, float]
    best_principle: str | None
    best_score: float
    emergent: bool
    decision: str = "pending"  # pending | accepted | rejected | relabeled
    decided_label: str | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "topic_id": self.topic_id,
            "scores": {k: self.scores[k] for k in sorted(self.scores)},
            "best_principle": self.best_principle,
            "best_score": self.best_score,
            "emergent": self.emergent,
            "decision": self.decision,
            "decided_label": self.decided_label,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AlignmentResult":
        return cls(
            topic_id=int(d["topic_id"]),
            scores={str(k): float(v) for k, v in d["scores"].items()},
            best_principle=d.get("best_principle"),
            best_score=float(d["best_score"]),
            emergent=bool(d["emergent"]),
            decision=d.get("decision", "pending"),
            decided_label=d.get("decided_label"),
            note=d.get("note"),
        )


def topic_text(topic: TopicSummary) -> str:
    return " ".join(term.replace("_", " ") for term, _ in topic.top_terms)


def align_topic(
    topic: TopicSummary,
    taxonomy: list[EthicsPrinciple],
    provider,
    threshold: float = DEFAULT_THRESHOLD,
    weight_by_phi: bool = False,
    definition_vectors: dict[str, EmbeddingVector] | None = None,
) -> AlignmentResult:
    """Score one topic against every principle definition.

    definition_vectors lets a caller embed the taxonomy once and reuse it
    across topics. weight_by_phi uses a phi-weighted mean of the term
    vectors instead of the flat topic text (static provider only).
    """
    if not taxonomy:
        raise SchemaError("taxonomy is empty")
    if not topic.top_terms:
        raise EmptyText(f"topic {topic.topic_id} has no terms")
    if weight_by_phi:
        if not isinstance(provider, StaticVectors):
            raise ProviderError("weight_by_phi requires the static provider")
        v_topic = provider.embed_weighted(topic.top_terms)
    else:
        v_topic = provider.embed(topic_text(topic))
    scores = {}
    for principle in taxonomy:
        if definition_vectors is not None and principle.id in definition_vectors:
            v_def = definition_vectors[principle.id]
        else:
            v_def = provider.embed(principle.definition)
            if definition_vectors is not None:
                definition_vectors[principle.id] = v_def
        scores[principle.id] = similarity(v_topic, v_def)
    best_id = None
    best = -np.inf
    for pid in sorted(scores):
        if scores[pid] > best:
            best = scores[pid]
            best_id = pid
    assigned = best >= threshold
    return AlignmentResult(
        topic_id=topic.topic_id,
        scores=scores,
        best_principle=best_id if assigned else None,
        best_score=float(best),
        emergent=not assigned,
    )


def align_topics(
    topics: list[TopicSummary],
    taxonomy: list[EthicsPrinciple],
    provider,
    threshold: float = DEFAULT_THRESHOLD,
    weight_by_phi: bool = False,
) -> list[AlignmentResult]:
    cache: dict[str, EmbeddingVector] = {}
    return [
        align_topic(t, taxonomy, provider, threshold, weight_by_phi, cache)
        for t in topics
    ]


# ---------------------------------------------------------------- decisions


@dataclass
class DecisionOutcome:
    mapping: dict[int, str]
    alignments: list[AlignmentResult]
    overlay: list[EthicsPrinciple]
    pending: list[int]


def _new_principle_from_label(label) -> EthicsPrinciple:
    if isinstance(label, dict):
        pid = label.get("id")
        if not pid:
            raise UnknownLabel("promoted principle payload needs an id")
        return EthicsPrinciple(
            id=pid,
            label=label.get("label", pid),
            definition=label.get("definition", ""),
            source="emergent",
        )
    if isinstance(label, str) and label:
        return EthicsPrinciple(id=label, label=label, definition="", source="emergent")
    raise UnknownLabel("promotion needs a label or {id, label, definition} payload")


def apply_decisions(
    alignments: list[AlignmentResult],
    decisions: list[dict],
    taxonomy: list[EthicsPrinciple],
) -> DecisionOutcome:
    """Replay a decision log over model alignments.

    The log is append-only and last-write-wins per topic. Assigned topics
    stand unless rejected or relabeled; emergent topics enter the mapping
    only once accepted under a label. Undecided emergent topics are
    excluded from the mapping but reported as pending.
    """
    by_topic = {a.topic_id: a for a in alignments}
    known_ids = {p.id for p in taxonomy}
    overlay: dict[str, EthicsPrinciple] = {}
    latest: dict[int, dict] = {}
    for decision in decisions:
        tid = decision.get("topic_id")
        if tid not in by_topic:
            raise UnknownTopic(f"decision references unknown topic {tid!r}")
        action = decision.get("action")
        label = decision.get("label")
        if action == "relabel":
            if not isinstance(label, str) or (label not in known_ids and label not in overlay):
                raise UnknownLabel(f"relabel to unknown principle {label!r}")
        elif action == "promote_emergent":
            principle = _new_principle_from_label(label)
            if principle.id in known_ids:
                raise DuplicateId(f"promoted id {principle.id!r} already in taxonomy")
            overlay[principle.id] = principle
        elif action == "accept":
            if by_topic[tid].emergent and label is not None:
                principle = _new_principle_from_label(label)
                if principle.id not in known_ids:
                    overlay[principle.id] = principle
        elif action != "reject":
            raise UnknownLabel(f"unknown decision action {action!r}")
        latest[tid] = decision

    mapping: dict[int, str] = {}
    updated: list[AlignmentResult] = []
    pending: list[int] = []
    for a in alignments:
        decision = latest.get(a.topic_id)
        if decision is None:
            updated.append(replace(a))
            if a.emergent:
                pending.append(a.topic_id)
            else:
                mapping[a.topic_id] = a.best_principle
            continue
        action = decision["action"]
        label = decision.get("label")
        note = decision.get("note")
        if action == "reject":
            updated.append(replace(a, decision="rejected", decided_label=None, note=note))
        elif action == "relabel":
            mapping[a.topic_id] = label
            updated.append(replace(a, decision="relabeled", decided_label=label, note=note))
        elif action in ("accept", "promote_emergent"):
            if a.emergent:
                if label is None:
                    pending.append(a.topic_id)
                    updated.append(replace(a, note=note))
                    continue
                pid = label["id"] if isinstance(label, dict) else label
            else:
                pid = a.best_principle
            mapping[a.topic_id] = pid
            updated.append(replace(a, decision="accepted", decided_label=pid, note=note))
    return DecisionOutcome(
        mapping=mapping,
        alignments=updated,
        overlay=[overlay[k] for k in sorted(overlay)],
        pending=pending,
    )


# ---------------------------------------------------------------- files


def save_alignments(alignments: list[AlignmentResult], path: str | Path) -> None:
    payload = [a.to_dict() for a in alignments]
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_alignments(path: str | Path) -> list[AlignmentResult]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return [AlignmentResult.from_dict(d) for d in payload]


def append_decision(path: str | Path, decision: dict) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(decision, sort_keys=True) + "\n")


def load_decisions(path: str | Path) -> list[dict]:
    p = Path(path)
    if not p.exists():
        return []
    out = []
    for line in p.read_text(encoding="utf-8").splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out
