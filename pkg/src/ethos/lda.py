"""Latent Dirichlet Allocation via collapsed Gibbs sampling.

The sampler is a numba kernel with an explicit splitmix64 generator, so a
given seed reproduces the chain bit for bit. Tokens are visited document by
document, and inside a document in lexicographic order of the token string;
that makes the chain invariant under any relabeling of term ids, which is
checked by the test suite.

Posterior means for phi and theta are averaged over post-burn-in samples
taken every sample_lag passes. The per-pass trace records the corpus token
log-likelihood under the current point estimates of phi and theta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from numba import njit

from .corpus import BowDocument, Vocabulary
from .errors import EmptyCorpus, InvalidConfig, TooFewTerms, TopicOutOfRange

FOLD_IN_SWEEPS = 20

_U64_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_U64_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_U64_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True)
def _next_uniform(state):
    """splitmix64 step; returns (new_state, uniform in [0, 1))."""
    state = state + _U64_GOLDEN
    z = state
    z = (z ^ (z >> np.uint64(30))) * _U64_MIX1
    z = (z ^ (z >> np.uint64(27))) * _U64_MIX2
    z = z ^ (z >> np.uint64(31))
    return state, np.float64(z >> np.uint64(11)) * _INV_2_53


@njit(cache=True)
def _gibbs_kernel(
    token_terms,
    doc_starts,
    k_topics,
    vocab_size,
    alpha,
    beta,
    passes,
    burn_in,
    sample_lag,
    seed,
):
    n_tokens = token_terms.shape[0]
    n_docs = doc_starts.shape[0] - 1

    z = np.zeros(n_tokens, dtype=np.int32)
    n_dk = np.zeros((n_docs, k_topics), dtype=np.int32)
    n_kw = np.zeros((k_topics, vocab_size), dtype=np.int32)
    n_k = np.zeros(k_topics, dtype=np.int64)

    state = np.uint64(seed)

    for d in range(n_docs):
        for i in range(doc_starts[d], doc_starts[d + 1]):
            state, u = _next_uniform(state)
            k0 = int(u * k_topics)
            if k0 >= k_topics:
                k0 = k_topics - 1
            z[i] = k0
            n_dk[d, k0] += 1
            n_kw[k0, token_terms[i]] += 1
            n_k[k0] += 1

    probs = np.zeros(k_topics, dtype=np.float64)
    phi_acc = np.zeros((k_topics, vocab_size), dtype=np.float64)
    theta_acc = np.zeros((n_docs, k_topics), dtype=np.float64)
    ll_trace = np.zeros(passes, dtype=np.float64)
    n_samples = 0
    v_beta = vocab_size * beta

    for sweep in range(passes):
        for d in range(n_docs):
            start = doc_starts[d]
            end = doc_starts[d + 1]
            for i in range(start, end):
                w = token_terms[i]
                k_old = z[i]
                n_dk[d, k_old] -= 1
                n_kw[k_old, w] -= 1
                n_k[k_old] -= 1

                total = 0.0
                for kk in range(k_topics):
                    p = (
                        (n_dk[d, kk] + alpha)
                        * (n_kw[kk, w] + beta)
                        / (n_k[kk] + v_beta)
                    )
                    total += p
                    probs[kk] = total

                state, u = _next_uniform(state)
                target = u * total
                k_new = 0
                while k_new < k_topics - 1 and probs[k_new] <= target:
                    k_new += 1

                z[i] = k_new
                n_dk[d, k_new] += 1
                n_kw[k_new, w] += 1
                n_k[k_new] += 1

        # corpus log-likelihood under the current point estimates
        ll = 0.0
        for d in range(n_docs):
            start = doc_starts[d]
            end = doc_starts[d + 1]
            doc_len = end - start
            denom_theta = doc_len + k_topics * alpha
            for i in range(start, end):
                w = token_terms[i]
                p_w = 0.0
                for kk in range(k_topics):
                    theta_dk = (n_dk[d, kk] + alpha) / denom_theta
                    phi_kw = (n_kw[kk, w] + beta) / (n_k[kk] + v_beta)
                    p_w += theta_dk * phi_kw
                ll += np.log(p_w)
        ll_trace[sweep] = ll

        if sweep >= burn_in and (sweep - burn_in) % sample_lag == 0:
            for kk in range(k_topics):
                denom = n_k[kk] + v_beta
                for w in range(vocab_size):
                    phi_acc[kk, w] += (n_kw[kk, w] + beta) / denom
            for d in range(n_docs):
                doc_len = doc_starts[d + 1] - doc_starts[d]
                denom = doc_len + k_topics * alpha
                for kk in range(k_topics):
                    theta_acc[d, kk] += (n_dk[d, kk] + alpha) / denom
            n_samples += 1

    if n_samples == 0:
        for kk in range(k_topics):
            denom = n_k[kk] + v_beta
            for w in range(vocab_size):
                phi_acc[kk, w] += (n_kw[kk, w] + beta) / denom
        for d in range(n_docs):
            doc_len = doc_starts[d + 1] - doc_starts[d]
            denom = doc_len + k_topics * alpha
            for kk in range(k_topics):
                theta_acc[d, kk] += (n_dk[d, kk] + alpha) / denom
        n_samples = 1

    return phi_acc / n_samples, theta_acc / n_samples, ll_trace, n_dk, n_kw, n_k


@njit(cache=True)
def _fold_in_kernel(token_terms, phi, alpha, sweeps, seed):
    k_topics = phi.shape[0]
    n = token_terms.shape[0]
    z = np.zeros(n, dtype=np.int32)
    n_k = np.zeros(k_topics, dtype=np.int32)
    state = np.uint64(seed)

    for i in range(n):
        state, u = _next_uniform(state)
        k0 = int(u * k_topics)
        if k0 >= k_topics:
            k0 = k_topics - 1
        z[i] = k0
        n_k[k0] += 1

    probs = np.zeros(k_topics, dtype=np.float64)
    for _ in range(sweeps):
        for i in range(n):
            w = token_terms[i]
            k_old = z[i]
            n_k[k_old] -= 1
            total = 0.0
            for kk in range(k_topics):
                p = (n_k[kk] + alpha) * phi[kk, w]
                total += p
                probs[kk] = total
            state, u = _next_uniform(state)
            target = u * total
            k_new = 0
            while k_new < k_topics - 1 and probs[k_new] <= target:
                k_new += 1
            z[i] = k_new
            n_k[k_new] += 1

    theta = np.zeros(k_topics, dtype=np.float64)
    denom = n + k_topics * alpha
    for kk in range(k_topics):
        theta[kk] = (n_k[kk] + alpha) / denom
    return theta


@dataclass
class LdaConfig:
    k: int
    alpha: float
    beta: float = 0.01
    passes: int = 200
    chunk_size: int = 2000
    seed: int = 7
    burn_in: int = 100
    sample_lag: int = 10

    def validate(self) -> None:
        if self.k < 1:
            raise InvalidConfig("k must be >= 1")
        if self.alpha <= 0 or self.beta <= 0:
            raise InvalidConfig("alpha and beta must be positive")
        if self.passes < 1:
            raise InvalidConfig("passes must be >= 1")
        if self.burn_in < 0:
            raise InvalidConfig("burn_in must be >= 0")
        if self.sample_lag < 1:
            raise InvalidConfig("sample_lag must be >= 1")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "beta": self.beta,
            "passes": self.passes,
            "chunk_size": self.chunk_size,
            "seed": self.seed,
            "burn_in": self.burn_in,
            "sample_lag": self.sample_lag,
        }


@dataclass
class LdaModel:
    config: LdaConfig
    phi: np.ndarray
    theta: np.ndarray
    log_likelihood_trace: list[float]
    doc_ids: list[str] = field(default_factory=list)
    n_dk: np.ndarray | None = None
    n_kw: np.ndarray | None = None
    n_k: np.ndarray | None = None


def _token_stream(docs: list[BowDocument], vocab: Vocabulary):
    """Flatten documents to a term-id array, tokens string-sorted per doc."""
    terms: list[int] = []
    starts = [0]
    for doc in docs:
        expanded: list[int] = []
        for tid, count in doc.counts:
            expanded.extend([tid] * count)
        expanded.sort(key=lambda t: vocab.id_to_token[t])
        terms.extend(expanded)
        starts.append(len(terms))
    return (
        np.asarray(terms, dtype=np.int32),
        np.asarray(starts, dtype=np.int64),
    )


def train_lda(docs: list[BowDocument], vocab: Vocabulary, config: LdaConfig) -> LdaModel:
    config.validate()
    if not docs:
        raise EmptyCorpus("no documents to train on")
    vocab_size = len(vocab)
    if vocab_size == 0:
        raise EmptyCorpus("empty vocabulary")
    token_terms, doc_starts = _token_stream(docs, vocab)
    if token_terms.size == 0:
        raise EmptyCorpus("all documents are empty after vocabulary mapping")

    phi, theta, ll_trace, n_dk, n_kw, n_k = _gibbs_kernel(
        token_terms,
        doc_starts,
        config.k,
        vocab_size,
        float(config.alpha),
        float(config.beta),
        config.passes,
        config.burn_in,
        config.sample_lag,
        np.uint64(config.seed),
    )

    # zero-length documents carry no evidence; pin them to the exact uniform
    for d, doc in enumerate(docs):
        if not doc.counts:
            theta[d, :] = 1.0 / config.k

    return LdaModel(
        config=config,
        phi=phi,
        theta=theta,
        log_likelihood_trace=[float(x) for x in ll_trace],
        doc_ids=[doc.review_id for doc in docs],
        n_dk=n_dk,
        n_kw=n_kw,
        n_k=n_k,
    )


def infer_doc_topics(model: LdaModel, doc: BowDocument, vocab: Vocabulary) -> np.ndarray:
    """Fold an unseen document into the trained model.

    Runs FOLD_IN_SWEEPS Gibbs sweeps against fixed phi with a fresh
    deterministic stream per document. An empty document gets the exact
    uniform distribution.
    """
    k = model.config.k
    if not doc.counts:
        return np.full(k, 1.0 / k)
    token_terms, _ = _token_stream([doc], vocab)
    return _fold_in_kernel(
        token_terms,
        model.phi,
        float(model.config.alpha),
        FOLD_IN_SWEEPS,
        np.uint64(model.config.seed),
    )


def doc_topics(
    model: LdaModel,
    docs: list[BowDocument] | None = None,
    vocab: Vocabulary | None = None,
) -> np.ndarray:
    """Stored theta for the training corpus, or fold-in for given docs."""
    if docs is None:
        return model.theta
    if vocab is None:
        raise InvalidConfig("vocab is required to infer topics for new documents")
    return np.vstack([infer_doc_topics(model, doc, vocab) for doc in docs])


def top_words(model: LdaModel, topic: int, vocab: Vocabulary, n: int = 20) -> list[str]:
    """The n highest-probability terms of a topic; ties break lexicographically."""
    k = model.config.k
    if not 0 <= topic < k:
        raise TopicOutOfRange(f"topic {topic} not in [0, {k})")
    if n > len(vocab):
        raise TooFewTerms(f"asked for {n} terms but vocabulary has {len(vocab)}")
    row = model.phi[topic]
    order = sorted(range(len(vocab)), key=lambda w: (-row[w], vocab.id_to_token[w]))
    return [vocab.id_to_token[w] for w in order[:n]]


@dataclass
class TopicSummary:
    topic_id: int
    top_terms: list[tuple[str, float]]  # (token, probability), non-increasing
    review_count: int


def summarize_topic(
    model: LdaModel,
    topic: int,
    vocab: Vocabulary,
    n: int = 20,
    assignments: "list[TopicAssignment] | None" = None,
) -> TopicSummary:
    """Top terms with their probabilities plus a count of primary documents."""
    tokens = top_words(model, topic, vocab, n=n)
    row = model.phi[topic]
    terms = [(t, float(row[vocab.token_to_id[t]])) for t in tokens]
    count = 0
    if assignments is not None:
        count = sum(1 for a in assignments if a.primary == topic)
    return TopicSummary(topic_id=topic, top_terms=terms, review_count=count)


@dataclass
class TopicAssignment:
    review_id: str
    primary: int
    secondary: list[int]


def assign_topics(
    model: LdaModel, tau_doc: float = 0.2, doc_ids: list[str] | None = None
) -> list[TopicAssignment]:
    """Primary topic is the argmax (ties to the lowest topic id); secondary
    topics are every topic at or above tau_doc, always including the primary."""
    ids = doc_ids if doc_ids is not None else model.doc_ids
    out = []
    for d in range(model.theta.shape[0]):
        row = model.theta[d]
        primary = int(np.argmax(row))  # argmax takes the first maximum
        secondary = sorted({k for k in range(row.shape[0]) if row[k] >= tau_doc} | {primary})
        out.append(
            TopicAssignment(
                review_id=ids[d] if d < len(ids) else str(d),
                primary=primary,
                secondary=secondary,
            )
        )
    return out


def save_model(model: LdaModel, path: str | Path) -> None:
    """model.json: config, 6-decimal phi, and the likelihood trace."""
    payload = {
        "config": model.config.to_dict(),
        "phi": [["%.6f" % x for x in row] for row in model.phi],
        "log_likelihood": [round(x, 4) for x in model.log_likelihood_trace],
        "doc_ids": model.doc_ids,
    }
    Path(path).write_text(json.dumps(payload, separators=(",", ":")) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> LdaModel:
    """Rebuild a model from model.json; phi rows are renormalized so the
    row-sum invariant survives the 6-decimal serialization."""
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    config = LdaConfig(**payload["config"])
    phi = np.asarray([[float(x) for x in row] for row in payload["phi"]], dtype=np.float64)
    phi = phi / phi.sum(axis=1, keepdims=True)
    return LdaModel(
        config=config,
        phi=phi,
        theta=np.zeros((0, config.k)),
        log_likelihood_trace=[float(x) for x in payload.get("log_likelihood", [])],
        doc_ids=list(payload.get("doc_ids", [])),
    )


def save_theta(theta: np.ndarray, path: str | Path) -> None:
    """theta.bin: one JSON header line, then row-major little-endian float32."""
    rows, cols = theta.shape
    header = json.dumps(
        {"rows": rows, "cols": cols, "dtype": "float32", "order": "C"},
        separators=(",", ":"),
    ).encode("utf-8")
    body = theta.astype("<f4").tobytes(order="C")
    with open(path, "wb") as fh:
        fh.write(header + b"\n" + body)


def load_theta(path: str | Path) -> np.ndarray:
    with open(path, "rb") as fh:
        header_line = fh.readline()
        header = json.loads(header_line.decode("utf-8"))
        rows, cols = header["rows"], header["cols"]
        body = fh.read()
    expected = rows * cols * 4
    if len(body) != expected:
        raise InvalidConfig(f"theta.bin body has {len(body)} bytes, expected {expected}")
    return np.frombuffer(body, dtype="<f4").reshape(rows, cols).astype(np.float64)
