"""Topic coherence from sliding-window co-occurrence statistics.

Windows are boolean: a term or term pair is counted at most once per
window, however often it repeats inside it. A document shorter than the
window size forms a single window; empty documents contribute no window.

NPMI edge cases are handled by explicit limits rather than smoothing:
a pair that never co-occurs scores -1, a pair present in every window
scores +1, and any term with no occurrences at all scores 0 against
everything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path

from .corpus import BowDocument, Vocabulary
from .errors import InvalidConfig, TooFewTerms
from .lda import LdaConfig, LdaModel, top_words, train_lda


@dataclass
class CooccurrenceCounts:
    window_size: int
    n_windows: int
    unigram_windows: dict
    pair_windows: dict

    def check(self) -> None:
        for count in self.unigram_windows.values():
            if count > self.n_windows:
                raise InvalidConfig("unigram window count exceeds total windows")
        for (wi, wj), count in self.pair_windows.items():
            bound = min(self.unigram_windows.get(wi, 0), self.unigram_windows.get(wj, 0))
            if count > bound:
                raise InvalidConfig("pair window count exceeds a member count")


def _pair_key(wi, wj):
    return (wi, wj) if wi < wj else (wj, wi)


def window_counts(docs: list[list], window_size: int) -> CooccurrenceCounts:
    """Count, per boolean sliding window, which terms and term pairs appear."""
    if window_size < 2:
        raise InvalidConfig("window_size must be >= 2")
    n_windows = 0
    unigrams: dict = {}
    pairs: dict = {}
    for doc in docs:
        if not doc:
            continue
        if len(doc) <= window_size:
            spans = [doc]
        else:
            spans = [doc[i : i + window_size] for i in range(len(doc) - window_size + 1)]
        for span in spans:
            n_windows += 1
            seen = sorted(set(span))
            for term in seen:
                unigrams[term] = unigrams.get(term, 0) + 1
            for i in range(len(seen)):
                for j in range(i + 1, len(seen)):
                    key = (seen[i], seen[j])
                    pairs[key] = pairs.get(key, 0) + 1
    counts = CooccurrenceCounts(window_size, n_windows, unigrams, pairs)
    counts.check()
    return counts


def npmi(counts: CooccurrenceCounts, wi, wj) -> float:
    if counts.n_windows == 0:
        return 0.0
    ci = counts.unigram_windows.get(wi, 0)
    cj = counts.unigram_windows.get(wj, 0)
    if ci == 0 or cj == 0:
        return 0.0
    if wi == wj:
        joint = ci
    else:
        joint = counts.pair_windows.get(_pair_key(wi, wj), 0)
    if joint == 0:
        return -1.0
    n = counts.n_windows
    p_joint = joint / n
    if p_joint == 1.0:
        return 1.0
    value = math.log(p_joint / ((ci / n) * (cj / n))) / -math.log(p_joint)
    # mathematically in [-1, 1]; guard the last ulp of the log ratio
    return max(-1.0, min(1.0, value))


def _cosine(a: list[float], b: list[float]) -> float:
    dot = 0.0
    na = 0.0
    nb = 0.0
    for x, y in zip(a, b):
        dot += x * y
        na += x * x
        nb += y * y
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / math.sqrt(na * nb)


def topic_coherence(counts: CooccurrenceCounts, top_terms: list) -> float:
    """Mean cosine between the NPMI context vectors of a topic's top terms.

    Each term's context vector holds its NPMI against every top term, with
    the self component fixed at 1. Terms are ordered canonically before any
    arithmetic, so the result is bit-identical under input permutation.
    """
    if len(top_terms) < 2:
        raise TooFewTerms("topic coherence needs at least two terms")
    terms = sorted(top_terms)
    vectors = []
    for wi in terms:
        vectors.append([1.0 if wi == wj else npmi(counts, wi, wj) for wj in terms])
    total = 0.0
    n_pairs = 0
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            total += _cosine(vectors[i], vectors[j])
            n_pairs += 1
    return total / n_pairs


@dataclass
class CoherenceCurve:
    points: list[tuple[int, float]]
    best_k: int

    def check(self) -> None:
        ks = [k for k, _ in self.points]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise InvalidConfig("curve k values must be strictly increasing")
        best = max(self.points, key=lambda p: (p[1], -p[0]))
        if best[0] != self.best_k:
            raise InvalidConfig("best_k does not attain the curve maximum")


def per_topic_coherence(
    model: LdaModel,
    vocab: Vocabulary,
    counts: CooccurrenceCounts,
    top_n: int = 20,
) -> list[float]:
    n_terms = min(top_n, len(vocab))
    return [
        topic_coherence(counts, top_words(model, k, vocab, n=n_terms))
        for k in range(model.config.k)
    ]


def sweep_k(
    corpus: list[BowDocument],
    vocab: Vocabulary,
    counts: CooccurrenceCounts,
    k_values: list[int],
    base_cfg: LdaConfig,
    top_n: int = 20,
    auto_alpha: bool = True,
) -> CoherenceCurve:
    """Train one model per candidate K (same seed) and score mean C_v.

    auto_alpha rescales the document prior to 50/k per candidate; otherwise
    base_cfg.alpha is reused as-is. top_n is capped at the vocabulary size.
    """
    if not k_values:
        raise InvalidConfig("k_values must be non-empty")
    points = []
    best_k = 0
    best_cv = -math.inf
    for k in sorted(set(k_values)):
        cfg = replace(base_cfg, k=k, alpha=(50.0 / k if auto_alpha else base_cfg.alpha))
        model = train_lda(corpus, vocab, cfg)
        scores = per_topic_coherence(model, vocab, counts, top_n=top_n)
        mean_cv = sum(scores) / len(scores)
        points.append((k, mean_cv))
        if mean_cv > best_cv:
            best_cv = mean_cv
            best_k = k
    curve = CoherenceCurve(points=points, best_k=best_k)
    curve.check()
    return curve


def save_curve(curve: CoherenceCurve, path: str | Path) -> None:
    lines = ["k,c_v"]
    for k, cv in curve.points:
        lines.append(f"{k},{cv:.6f}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_curve(path: str | Path) -> CoherenceCurve:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "k,c_v":
        raise InvalidConfig("coherence curve file must start with a k,c_v header")
    points = []
    for line in lines[1:]:
        if not line:
            continue
        k_text, cv_text = line.split(",")
        points.append((int(k_text), float(cv_text)))
    if not points:
        raise InvalidConfig("coherence curve file has no data rows")
    best = max(points, key=lambda p: (p[1], -p[0]))
    curve = CoherenceCurve(points=points, best_k=best[0])
    curve.check()
    return curve
