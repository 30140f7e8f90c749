import json
import random

import numpy as np
import pytest

from ethos import corpus as cp
from ethos import lda
from ethos.errors import EmptyCorpus, InvalidConfig, TooFewTerms, TopicOutOfRange


def tiny_corpus(seed=0, n_docs=12, vocab=("calm", "data", "help", "sleep", "track", "worry")):
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        words = [rng.choice(vocab) for _ in range(rng.randint(3, 9))]
        docs.append((f"r{i}", words))
    vocabulary = cp.build_vocabulary([w for _, w in docs], min_doc_freq=1, max_doc_fraction=1.0)
    bows = [cp.to_bow(rid, words, vocabulary) for rid, words in docs]
    return bows, vocabulary


def small_config(k=2, seed=11, passes=40, burn_in=20, sample_lag=5):
    return lda.LdaConfig(k=k, alpha=50.0 / k, passes=passes, seed=seed, burn_in=burn_in, sample_lag=sample_lag)


class TestTrain:
    def test_rows_are_distributions(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        assert model.phi.shape == (2, len(vocab))
        assert model.theta.shape == (len(bows), 2)
        assert np.all(model.phi > 0)
        assert np.all(model.theta > 0)
        np.testing.assert_allclose(model.phi.sum(axis=1), 1.0, atol=1e-9)
        np.testing.assert_allclose(model.theta.sum(axis=1), 1.0, atol=1e-9)

    def test_same_seed_bit_identical(self):
        bows, vocab = tiny_corpus()
        a = lda.train_lda(bows, vocab, small_config(seed=99))
        b = lda.train_lda(bows, vocab, small_config(seed=99))
        assert np.array_equal(a.phi, b.phi)
        assert np.array_equal(a.theta, b.theta)
        assert a.log_likelihood_trace == b.log_likelihood_trace

    def test_different_seed_differs(self):
        bows, vocab = tiny_corpus()
        a = lda.train_lda(bows, vocab, small_config(seed=1))
        b = lda.train_lda(bows, vocab, small_config(seed=2))
        assert not np.array_equal(a.phi, b.phi)

    def test_count_conservation(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=3))
        total_tokens = sum(b.n_tokens() for b in bows)
        assert model.n_dk.sum() == total_tokens
        assert model.n_kw.sum() == total_tokens
        assert model.n_k.sum() == total_tokens
        np.testing.assert_array_equal(model.n_dk.sum(axis=0), model.n_k)
        np.testing.assert_array_equal(model.n_kw.sum(axis=1), model.n_k)
        for d, bow in enumerate(bows):
            assert model.n_dk[d].sum() == bow.n_tokens()
        assert np.all(model.n_dk >= 0) and np.all(model.n_kw >= 0)

    def test_permutation_equivariance(self):
        bows, vocab = tiny_corpus(seed=3)
        config = small_config(seed=42)
        base = lda.train_lda(bows, vocab, config)

        # relabel term ids with a fixed scramble of the same token set
        perm = [3, 0, 5, 1, 4, 2]
        id_to_token = [""] * len(vocab)
        for old_id, new_id in enumerate(perm):
            id_to_token[new_id] = vocab.id_to_token[old_id]
        scrambled = cp.Vocabulary(
            token_to_id={t: i for i, t in enumerate(id_to_token)},
            id_to_token=id_to_token,
            doc_freq=[0] * len(vocab),
        )
        remapped = [
            cp.BowDocument(b.review_id, sorted((perm[t], c) for t, c in b.counts))
            for b in bows
        ]
        other = lda.train_lda(remapped, scrambled, config)

        assert np.array_equal(base.theta, other.theta)
        assert base.log_likelihood_trace == other.log_likelihood_trace
        for old_id, new_id in enumerate(perm):
            assert np.array_equal(base.phi[:, old_id], other.phi[:, new_id])

    def test_k1_degenerate(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=1))
        np.testing.assert_allclose(model.theta, 1.0, atol=1e-12)
        counts = np.zeros(len(vocab))
        for b in bows:
            for t, c in b.counts:
                counts[t] += c
        expected = (counts + model.config.beta) / (counts.sum() + len(vocab) * model.config.beta)
        np.testing.assert_allclose(model.phi[0], expected, atol=1e-12)

    def test_empty_doc_uniform(self):
        bows, vocab = tiny_corpus()
        bows.append(cp.BowDocument("empty", []))
        model = lda.train_lda(bows, vocab, small_config(k=4))
        np.testing.assert_array_equal(model.theta[-1], np.full(4, 0.25))

    def test_empty_corpus_raises(self):
        _, vocab = tiny_corpus()
        with pytest.raises(EmptyCorpus):
            lda.train_lda([], vocab, small_config())

    def test_bad_config(self):
        with pytest.raises(InvalidConfig):
            lda.LdaConfig(k=0, alpha=1.0).validate()
        with pytest.raises(InvalidConfig):
            lda.LdaConfig(k=2, alpha=-1.0).validate()

    def test_ll_trace_shape_and_progress(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(passes=40))
        trace = model.log_likelihood_trace
        assert len(trace) == 40
        assert all(np.isfinite(x) for x in trace)
        assert max(trace[20:]) >= trace[0]


class TestTopWords:
    def test_ties_lexicographic(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=1))
        # force exact ties, then expect alphabetical order
        model.phi = np.full((1, len(vocab)), 1.0 / len(vocab))
        words = lda.top_words(model, 0, vocab, n=len(vocab))
        assert words == sorted(vocab.id_to_token)

    def test_out_of_range(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        with pytest.raises(TopicOutOfRange):
            lda.top_words(model, 2, vocab)
        with pytest.raises(TopicOutOfRange):
            lda.top_words(model, -1, vocab)

    def test_too_few_terms(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        with pytest.raises(TooFewTerms):
            lda.top_words(model, 0, vocab, n=len(vocab) + 1)

    def test_top_word_is_most_probable(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=2))
        words = lda.top_words(model, 0, vocab, n=3)
        row = model.phi[0]
        assert row[vocab.token_to_id[words[0]]] == row.max()


class TestAssign:
    def make_model(self, theta):
        config = lda.LdaConfig(k=theta.shape[1], alpha=1.0)
        return lda.LdaModel(
            config=config,
            phi=np.full((theta.shape[1], 4), 0.25),
            theta=np.asarray(theta, dtype=np.float64),
            log_likelihood_trace=[],
            doc_ids=[f"d{i}" for i in range(theta.shape[0])],
        )

    def test_primary_argmax(self):
        model = self.make_model(np.array([[0.1, 0.7, 0.2]]))
        a = lda.assign_topics(model)[0]
        assert a.primary == 1

    def test_tie_takes_lowest_id(self):
        model = self.make_model(np.array([[0.4, 0.4, 0.2]]))
        assert lda.assign_topics(model)[0].primary == 0

    def test_secondary_threshold_and_primary_always_in(self):
        model = self.make_model(np.array([[0.5, 0.3, 0.15, 0.05]]))
        a = lda.assign_topics(model, tau_doc=0.2)[0]
        assert a.secondary == [0, 1]
        b = lda.assign_topics(model, tau_doc=0.9)[0]
        assert b.secondary == [0]

    def test_review_ids_carried(self):
        model = self.make_model(np.array([[0.9, 0.1], [0.2, 0.8]]))
        out = lda.assign_topics(model)
        assert [a.review_id for a in out] == ["d0", "d1"]


class TestFoldIn:
    def test_deterministic(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        t1 = lda.infer_doc_topics(model, bows[0], vocab)
        t2 = lda.infer_doc_topics(model, bows[0], vocab)
        assert np.array_equal(t1, t2)

    def test_distribution(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=3))
        theta = lda.infer_doc_topics(model, bows[1], vocab)
        assert theta.shape == (3,)
        assert theta.sum() == pytest.approx(1.0, abs=1e-9)

    def test_empty_doc_uniform(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=5))
        theta = lda.infer_doc_topics(model, cp.BowDocument("e", []), vocab)
        np.testing.assert_array_equal(theta, np.full(5, 0.2))

    def test_doc_topics_dispatch(self):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        assert lda.doc_topics(model) is model.theta
        inferred = lda.doc_topics(model, bows[:2], vocab)
        assert inferred.shape == (2, 2)
        with pytest.raises(InvalidConfig):
            lda.doc_topics(model, bows[:1])


class TestSerialization:
    def test_model_round_trip(self, tmp_path):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config(k=3, seed=5))
        path = tmp_path / "model.json"
        lda.save_model(model, path)
        loaded = lda.load_model(path)
        assert loaded.config == model.config
        np.testing.assert_allclose(loaded.phi, model.phi, atol=5e-6)
        np.testing.assert_allclose(loaded.phi.sum(axis=1), 1.0, atol=1e-9)
        assert loaded.doc_ids == model.doc_ids

    def test_phi_is_fixed_decimal(self, tmp_path):
        bows, vocab = tiny_corpus()
        model = lda.train_lda(bows, vocab, small_config())
        path = tmp_path / "model.json"
        lda.save_model(model, path)
        payload = json.loads(path.read_text(encoding="utf-8"))
        cell = payload["phi"][0][0]
        assert isinstance(cell, str)
        assert len(cell.split(".")[1]) == 6

    def test_theta_round_trip(self, tmp_path):
        theta = np.array([[0.25, 0.75], [0.6, 0.4], [0.5, 0.5]])
        path = tmp_path / "theta.bin"
        lda.save_theta(theta, path)
        loaded = lda.load_theta(path)
        assert loaded.shape == theta.shape
        np.testing.assert_allclose(loaded, theta, atol=1e-6)

    def test_theta_header(self, tmp_path):
        theta = np.zeros((2, 4))
        path = tmp_path / "theta.bin"
        lda.save_theta(theta, path)
        header = json.loads(open(path, "rb").readline().decode("utf-8"))
        assert header == {"rows": 2, "cols": 4, "dtype": "float32", "order": "C"}

    def test_theta_truncation_detected(self, tmp_path):
        theta = np.zeros((2, 2))
        path = tmp_path / "theta.bin"
        lda.save_theta(theta, path)
        raw = path.read_bytes()
        path.write_bytes(raw[:-3])
        with pytest.raises(InvalidConfig):
            lda.load_theta(path)
