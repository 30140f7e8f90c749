"""Vocabulary building, phrase merging, and bag-of-words serialization."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyVocabulary, VocabularyMismatch


@dataclass
class Vocabulary:
    token_to_id: dict[str, int]
    id_to_token: list[str]
    doc_freq: list[int]

    def __len__(self) -> int:
        return len(self.id_to_token)


@dataclass
class BowDocument:
    review_id: str
    counts: list[tuple[int, int]]  # (term_id, count), term_id strictly increasing

    def n_tokens(self) -> int:
        return sum(c for _, c in self.counts)


def phrase_score(pair_count: int, count_a: int, count_b: int, n_unique: int, min_count: int) -> float:
    """Association score for merging a bigram, normalized by vocabulary size."""
    if count_a == 0 or count_b == 0:
        return 0.0
    return (pair_count - min_count) * n_unique / (count_a * count_b)


def _one_phrase_pass(
    docs: list[list[str]], min_count: int, threshold: float
) -> list[list[str]]:
    unigram: Counter[str] = Counter()
    bigram: Counter[tuple[str, str]] = Counter()
    for doc in docs:
        unigram.update(doc)
        bigram.update(zip(doc, doc[1:]))
    n_unique = len(unigram)
    if n_unique == 0:
        return [list(doc) for doc in docs]

    def should_merge(a: str, b: str) -> bool:
        pc = bigram[(a, b)]
        if pc < min_count:
            return False
        return phrase_score(pc, unigram[a], unigram[b], n_unique, min_count) >= threshold

    merged_docs = []
    for doc in docs:
        out: list[str] = []
        i = 0
        while i < len(doc):
            if i + 1 < len(doc) and should_merge(doc[i], doc[i + 1]):
                out.append(doc[i] + "_" + doc[i + 1])
                i += 2
            else:
                out.append(doc[i])
                i += 1
        merged_docs.append(out)
    return merged_docs


def detect_phrases(
    docs: list[list[str]],
    min_count: int = 5,
    threshold: float = 10.0,
    passes: int = 2,
) -> list[list[str]]:
    """Merge frequent collocations into underscore-joined tokens.

    Greedy left-to-right within each document, no overlapping merges. A
    second pass over the merged stream lets phrases grow to three words.
    """
    out = [list(doc) for doc in docs]
    for _ in range(passes):
        out = _one_phrase_pass(out, min_count, threshold)
    return out


def build_vocabulary(
    docs: list[list[str]],
    min_doc_freq: int = 5,
    max_doc_fraction: float = 0.5,
) -> Vocabulary:
    """Dense lexicographic vocabulary over tokens that clear both frequency gates.

    min_doc_freq is an absolute document count; max_doc_fraction is a share
    of all documents. Raises EmptyVocabulary when nothing survives.
    """
    df: Counter[str] = Counter()
    for doc in docs:
        df.update(set(doc))
    n_docs = len(docs)
    ceiling = max_doc_fraction * n_docs
    tokens = sorted(t for t, c in df.items() if c >= min_doc_freq and c <= ceiling)
    if not tokens:
        raise EmptyVocabulary(
            f"no tokens left with min_doc_freq={min_doc_freq}, "
            f"max_doc_fraction={max_doc_fraction} over {n_docs} docs"
        )
    return Vocabulary(
        token_to_id={t: i for i, t in enumerate(tokens)},
        id_to_token=tokens,
        doc_freq=[df[t] for t in tokens],
    )


def to_bow(review_id: str, doc: list[str], vocab: Vocabulary) -> BowDocument:
    """Count in-vocabulary tokens; out-of-vocabulary tokens are ignored."""
    counter: Counter[int] = Counter()
    for tok in doc:
        tid = vocab.token_to_id.get(tok)
        if tid is not None:
            counter[tid] += 1
    return BowDocument(review_id=review_id, counts=sorted(counter.items()))


def save_vocabulary(vocab: Vocabulary, path: str | Path) -> None:
    payload = {"tokens": vocab.id_to_token, "doc_freq": vocab.doc_freq}
    Path(path).write_text(json.dumps(payload, separators=(",", ":")) + "\n", encoding="utf-8")


def load_vocabulary(path: str | Path) -> Vocabulary:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    tokens = payload["tokens"]
    doc_freq = payload["doc_freq"]
    if len(tokens) != len(doc_freq):
        raise VocabularyMismatch("tokens and doc_freq lengths differ")
    return Vocabulary(
        token_to_id={t: i for i, t in enumerate(tokens)},
        id_to_token=list(tokens),
        doc_freq=list(doc_freq),
    )


def save_bow(docs: list[BowDocument], path: str | Path) -> None:
    lines = []
    for doc in docs:
        pairs = " ".join(f"{tid}:{count}" for tid, count in doc.counts)
        lines.append(f"{doc.review_id}\t{pairs}" if pairs else doc.review_id)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_bow(path: str | Path) -> list[BowDocument]:
    docs = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        review_id, _, rest = line.partition("\t")
        counts: list[tuple[int, int]] = []
        last = -1
        for cell in rest.split():
            tid_s, _, count_s = cell.partition(":")
            tid, count = int(tid_s), int(count_s)
            if tid <= last:
                raise VocabularyMismatch(f"term ids not increasing in {review_id}")
            last = tid
            counts.append((tid, count))
        docs.append(BowDocument(review_id=review_id, counts=counts))
    return docs
