"""Per-(review, ethical aspect) polarity scoring and its aggregations.

The default provider is a lemma-keyed lexicon. Scoring is conditioned on
the aspect: when any aspect keyword occurs in the review, only lemmas
near a hit are scored; otherwise the whole review counts. A scored word
shortly after a negator flips sign. The summed score is squashed through
a logistic to produce the (p_pos, p_neg) pair the contract requires.

A remote classifier can replace the lexicon via the http-absa provider.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from . import data, stores
from .alignment import EthicsPrinciple
from .errors import EmptyText, EmptyTopic, NetworkError, ProviderError, SchemaError
from .lda import TopicAssignment
from .textprep import lemmatize_token, normalize, sentiment_tokens

NEGATION_WINDOW = 3
ASPECT_WINDOW = 6


# ---------------------------------------------------------------- lexicon


@dataclass(frozen=True)
class SentimentLexicon:
    word_scores: dict
    negators: frozenset
    negation_window: int = NEGATION_WINDOW


def load_lexicon() -> SentimentLexicon:
    """Bundled lexicon with every key mapped into the sentiment lemma space.

    Keys are lemmatized with the same rules applied to review tokens, so a
    surface form in the file always meets its review-side counterpart. On
    collisions after lemmatization the first entry wins.
    """
    scores: dict = {}
    for word, value in data.tsv_pairs("sentiment_lexicon.tsv"):
        score = float(value)
        if not -1.0 <= score <= 1.0:
            raise SchemaError(f"lexicon score out of range for {word!r}: {score}")
        lemma = lemmatize_token(word)
        if lemma not in scores:
            scores[lemma] = score
    negators = frozenset(data.wordlist("negators.txt"))
    return SentimentLexicon(word_scores=scores, negators=negators)


_keyword_cache: dict = {}


def aspect_keywords(aspect: EthicsPrinciple) -> frozenset:
    """Content lemmas of the aspect's label and definition."""
    key = (aspect.id, aspect.label, aspect.definition)
    cached = _keyword_cache.get(key)
    if cached is None:
        cached = frozenset(normalize(aspect.label + " " + aspect.definition))
        _keyword_cache[key] = cached
    return cached


def lexicon_score(
    lemmas: list[str],
    aspect: EthicsPrinciple | None,
    lex: SentimentLexicon,
    aspect_window: int = ASPECT_WINDOW,
) -> tuple[float, float]:
    """Aspect-conditioned lexicon sum squashed to a probability pair."""
    if aspect is not None:
        keywords = aspect_keywords(aspect)
        hits = [i for i, lemma in enumerate(lemmas) if lemma in keywords]
    else:
        hits = []
    raw = 0.0
    for i, lemma in enumerate(lemmas):
        score = lex.word_scores.get(lemma)
        if score is None:
            continue
        if hits and not any(abs(i - h) <= aspect_window for h in hits):
            continue
        for j in range(max(0, i - lex.negation_window), i):
            if lemmas[j] in lex.negators:
                score = -score
                break
        raw += score
    p_pos = 1.0 / (1.0 + math.exp(-raw))
    return p_pos, 1.0 - p_pos


# ---------------------------------------------------------------- providers


class LexiconSentiment:
    provider_id = "lexicon"

    def __init__(self, lexicon: SentimentLexicon | None = None):
        self.lexicon = lexicon if lexicon is not None else load_lexicon()

    def probabilities(self, text: str, aspect: EthicsPrinciple) -> tuple[float, float]:
        return lexicon_score(sentiment_tokens(text), aspect, self.lexicon)


class HttpAbsa:
    """Remote classifier speaking POST {"text", "aspect"} -> {"p_pos", "p_neg"}."""

    provider_id = "http-absa"

    def __init__(self, url: str):
        if not url:
            raise ProviderError("http-absa needs a URL")
        self.url = url.rstrip("/") + "/absa"

    def probabilities(self, text: str, aspect: EthicsPrinciple) -> tuple[float, float]:
        try:
            body = stores.http_post_json(self.url, {"text": text, "aspect": aspect.id})
        except NetworkError as exc:
            raise ProviderError(str(exc)) from exc
        if not isinstance(body, dict) or "p_pos" not in body or "p_neg" not in body:
            raise ProviderError(f"malformed absa response from {self.url}")
        p_pos = float(body["p_pos"])
        p_neg = float(body["p_neg"])
        if abs(p_pos + p_neg - 1.0) > 1e-6:
            raise ProviderError("absa probabilities do not sum to 1")
        return p_pos, 1.0 - p_pos


def make_provider(name: str, url: str = ""):
    if name == "lexicon":
        return LexiconSentiment()
    if name == "http":
        return HttpAbsa(url)
    raise ProviderError(f"unknown sentiment provider {name!r}")


# ---------------------------------------------------------------- classify


@dataclass(frozen=True)
class AspectSentiment:
    review_id: str
    aspect_id: str
    p_pos: float
    p_neg: float
    polarity: int

    def to_dict(self) -> dict:
        return {
            "review_id": self.review_id,
            "aspect_id": self.aspect_id,
            "p_pos": self.p_pos,
            "p_neg": self.p_neg,
            "polarity": self.polarity,
        }


def classify(
    review_text: str,
    aspect: EthicsPrinciple,
    provider,
    review_id: str = "",
) -> AspectSentiment:
    if not review_text.strip():
        raise EmptyText("cannot classify empty review text")
    p_pos, p_neg = provider.probabilities(review_text, aspect)
    return AspectSentiment(
        review_id=review_id,
        aspect_id=aspect.id,
        p_pos=p_pos,
        p_neg=p_neg,
        polarity=1 if p_pos >= p_neg else -1,
    )


# ---------------------------------------------------------------- aggregate


def topic_sentiment(polarities: list[int]) -> float:
    if not polarities:
        raise EmptyTopic("topic has no polarities to average")
    return sum(polarities) / len(polarities)


@dataclass(frozen=True)
class EthicsReportRow:
    ethic_id: str
    label: str
    source: str
    frequency_pct: float
    mean_sentiment: float
    n_reviews: int


def score_reviews(
    reviews: list[tuple[str, str]],
    assignments: list[TopicAssignment],
    mapping: dict[int, str],
    principles: dict[str, EthicsPrinciple],
    provider,
) -> list[AspectSentiment]:
    """One classification per (contributing review, mapped ethic) pair.

    A review contributes to an ethic when any topic in its secondary set
    maps to it; each pair is classified once even if several topics agree.
    """
    by_id = {a.review_id: a for a in assignments}
    out = []
    for review_id, text in reviews:
        assignment = by_id.get(review_id)
        if assignment is None:
            continue
        ethic_ids = sorted({mapping[t] for t in assignment.secondary if t in mapping})
        for ethic_id in ethic_ids:
            out.append(classify(text, principles[ethic_id], provider, review_id=review_id))
    return out


def ethics_rows(
    sentiments: list[AspectSentiment],
    n_reviews_total: int,
    principles: dict[str, EthicsPrinciple],
) -> list[EthicsReportRow]:
    """Aggregate per-pair classifications into the ethics table rows.

    Rows are sorted known before emergent, then by descending frequency,
    then by ethic id. Ethics with no contributing reviews emit no row.
    """
    grouped: dict[str, list[int]] = {}
    for s in sentiments:
        grouped.setdefault(s.aspect_id, []).append(s.polarity)
    rows = []
    for ethic_id, polarities in grouped.items():
        principle = principles[ethic_id]
        rows.append(
            EthicsReportRow(
                ethic_id=ethic_id,
                label=principle.label,
                source=principle.source,
                frequency_pct=100.0 * len(polarities) / n_reviews_total if n_reviews_total else 0.0,
                mean_sentiment=topic_sentiment(polarities),
                n_reviews=len(polarities),
            )
        )
    rows.sort(key=lambda r: (r.source != "known", -r.frequency_pct, r.ethic_id))
    return rows


def ethics_sentiment(
    reviews: list[tuple[str, str]],
    assignments: list[TopicAssignment],
    mapping: dict[int, str],
    principles: dict[str, EthicsPrinciple],
    provider,
) -> tuple[list[EthicsReportRow], list[AspectSentiment]]:
    sentiments = score_reviews(reviews, assignments, mapping, principles, provider)
    return ethics_rows(sentiments, len(reviews), principles), sentiments


def topic_polarities(
    reviews: list[tuple[str, str]],
    assignments: list[TopicAssignment],
    mapping: dict[int, str],
    principles: dict[str, EthicsPrinciple],
    provider,
) -> dict[int, list[int]]:
    """Polarities per topic, scored against the topic's own mapped ethic.

    Topics without a mapped ethic get no entry; membership is by primary
    assignment.
    """
    by_id = {a.review_id: a for a in assignments}
    out: dict[int, list[int]] = {}
    for review_id, text in reviews:
        assignment = by_id.get(review_id)
        if assignment is None:
            continue
        ethic_id = mapping.get(assignment.primary)
        if ethic_id is None:
            continue
        s = classify(text, principles[ethic_id], provider, review_id=review_id)
        out.setdefault(assignment.primary, []).append(s.polarity)
    return out


# ---------------------------------------------------------------- files


def save_sentiments(sentiments: list[AspectSentiment], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s in sentiments:
            fh.write(json.dumps(s.to_dict(), sort_keys=True) + "\n")


def load_sentiments(path: str | Path) -> list[AspectSentiment]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        d = json.loads(line)
        out.append(
            AspectSentiment(
                review_id=d["review_id"],
                aspect_id=d["aspect_id"],
                p_pos=float(d["p_pos"]),
                p_neg=float(d["p_neg"]),
                polarity=int(d["polarity"]),
            )
        )
    return out
