import math
import random

import numpy as np
import pytest

from ethos import coherence as coh
from ethos import lda
from ethos.errors import InvalidConfig, TooFewTerms
from synthcorpus import block_corpus, random_small_corpus


# ---------------------------------------------------------------- oracles


def brute_force_counts(docs, window_size):
    """Independent window enumerator: list every window, then ask per term."""
    windows = []
    for doc in docs:
        if not doc:
            continue
        if len(doc) <= window_size:
            windows.append(list(doc))
        else:
            for start in range(len(doc) - window_size + 1):
                windows.append(doc[start : start + window_size])
    terms = sorted({t for w in windows for t in w})
    unigrams = {}
    pairs = {}
    for t in terms:
        c = sum(1 for w in windows if t in w)
        if c:
            unigrams[t] = c
    for a_idx in range(len(terms)):
        for b_idx in range(a_idx + 1, len(terms)):
            a, b = terms[a_idx], terms[b_idx]
            c = sum(1 for w in windows if a in w and b in w)
            if c:
                pairs[(a, b)] = c
    return len(windows), unigrams, pairs


def oracle_npmi(n_windows, unigrams, pairs, wi, wj):
    if n_windows == 0:
        return 0.0
    ci = unigrams.get(wi, 0)
    cj = unigrams.get(wj, 0)
    if ci == 0 or cj == 0:
        return 0.0
    joint = ci if wi == wj else pairs.get((min(wi, wj), max(wi, wj)), 0)
    if joint == 0:
        return -1.0
    p = joint / n_windows
    if p == 1.0:
        return 1.0
    v = math.log(p / ((ci / n_windows) * (cj / n_windows))) / -math.log(p)
    return max(-1.0, min(1.0, v))


def oracle_cv(counts, top_terms):
    """Straight-line reference: numpy context vectors in the given order."""
    n = len(top_terms)
    mat = np.empty((n, n))
    for i, wi in enumerate(top_terms):
        for j, wj in enumerate(top_terms):
            mat[i, j] = 1.0 if i == j else coh.npmi(counts, wi, wj)
    total = 0.0
    pairs = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = mat[i], mat[j]
            na, nb = np.linalg.norm(a), np.linalg.norm(b)
            total += 0.0 if na == 0 or nb == 0 else float(a @ b / (na * nb))
            pairs += 1
    return total / pairs


# ---------------------------------------------------------------- windows


class TestWindowCounts:
    def test_short_doc_single_window(self):
        c = coh.window_counts([["a", "b"]], 110)
        assert c.n_windows == 1
        assert c.unigram_windows == {"a": 1, "b": 1}
        assert c.pair_windows == {("a", "b"): 1}

    def test_hand_counted_sliding(self):
        c = coh.window_counts([["a", "b", "a"]], 2)
        assert c.n_windows == 2
        assert c.unigram_windows == {"a": 2, "b": 2}
        assert c.pair_windows == {("a", "b"): 2}

    def test_boolean_not_frequency(self):
        c = coh.window_counts([["a", "a", "a"]], 110)
        assert c.unigram_windows == {"a": 1}

    def test_empty_doc_contributes_nothing(self):
        c = coh.window_counts([[], ["a"]], 5)
        assert c.n_windows == 1

    def test_window_size_floor(self):
        with pytest.raises(InvalidConfig):
            coh.window_counts([["a"]], 1)

    def test_matches_brute_force_on_random_corpora(self):
        rng = random.Random(77)
        for _ in range(200):
            docs = random_small_corpus(rng)
            w = rng.choice([2, 3, 5, 10, 110])
            got = coh.window_counts(docs, w)
            n, uni, pairs = brute_force_counts(docs, w)
            assert got.n_windows == n
            assert got.unigram_windows == uni
            assert got.pair_windows == pairs

    def test_invariant_checker_rejects_bad_counts(self):
        c = coh.window_counts([["a", "b"]], 5)
        c.pair_windows[("a", "b")] = 9
        with pytest.raises(InvalidConfig):
            c.check()
        c = coh.window_counts([["a", "b"]], 5)
        c.unigram_windows["a"] = 2
        with pytest.raises(InvalidConfig):
            c.check()


# ---------------------------------------------------------------- npmi


class TestNpmi:
    def test_disjoint_pair_is_minus_one(self):
        c = coh.window_counts([["a"], ["b"]], 5)
        assert coh.npmi(c, "a", "b") == -1.0

    def test_perfect_association_is_one(self):
        c = coh.window_counts([["a", "b"], ["c"]], 5)
        assert coh.npmi(c, "a", "b") == 1.0

    def test_always_together_everywhere_is_one(self):
        c = coh.window_counts([["a", "b"], ["a", "b"]], 5)
        assert coh.npmi(c, "a", "b") == 1.0

    def test_unknown_term_is_zero(self):
        c = coh.window_counts([["a", "b"]], 5)
        assert coh.npmi(c, "a", "zzz") == 0.0
        assert coh.npmi(c, "zzz", "qqq") == 0.0

    def test_independent_pair_near_zero(self):
        # a in half the windows, b in half, together in a quarter
        docs = [["a", "b"], ["a"], ["b"], ["x"]]
        c = coh.window_counts(docs, 5)
        assert coh.npmi(c, "a", "b") == pytest.approx(0.0, abs=1e-12)

    def test_matches_formula_on_random_corpora(self):
        rng = random.Random(5150)
        for _ in range(300):
            docs = random_small_corpus(rng)
            w = rng.choice([2, 4, 110])
            c = coh.window_counts(docs, w)
            n, uni, pairs = brute_force_counts(docs, w)
            for _ in range(5):
                wi = rng.randrange(8)
                wj = rng.randrange(8)
                got = coh.npmi(c, wi, wj)
                assert got == oracle_npmi(n, uni, pairs, wi, wj)
                assert -1.0 <= got <= 1.0
                assert got == coh.npmi(c, wj, wi)


# ---------------------------------------------------------------- c_v


class TestTopicCoherence:
    def test_identical_context_vectors_give_one(self):
        c = coh.window_counts([["a", "b"], ["a", "b"], ["x"]], 5)
        assert coh.topic_coherence(c, ["a", "b"]) == pytest.approx(1.0, abs=1e-12)

    def test_needs_two_terms(self):
        c = coh.window_counts([["a", "b"]], 5)
        with pytest.raises(TooFewTerms):
            coh.topic_coherence(c, ["a"])

    def test_matches_oracle_on_toy_topic(self):
        rng = random.Random(99)
        docs = [[rng.randrange(7) for _ in range(rng.randint(1, 25))] for _ in range(6)]
        c = coh.window_counts(docs, 4)
        terms = [0, 1, 2, 3, 4]
        got = coh.topic_coherence(c, terms)
        assert got == pytest.approx(oracle_cv(c, sorted(terms)), abs=1e-12)
        assert -1.0 <= got <= 1.0

    def test_permutation_invariant_bitwise(self):
        rng = random.Random(31337)
        docs = [[rng.randrange(9) for _ in range(rng.randint(1, 30))] for _ in range(8)]
        c = coh.window_counts(docs, 6)
        terms = list(range(6))
        base = coh.topic_coherence(c, terms)
        for _ in range(100):
            shuffled = terms[:]
            rng.shuffle(shuffled)
            assert coh.topic_coherence(c, shuffled) == base
            assert oracle_cv(c, shuffled) == pytest.approx(base, abs=1e-12)

    def test_anticorrelated_terms_go_negative(self):
        # two disjoint cliques: cross-clique cosine is negative, so the
        # mean over all pairs dips below zero rather than being clamped
        docs = [["a", "b"]] * 3 + [["c", "d"]] * 3
        c = coh.window_counts(docs, 5)
        value = coh.topic_coherence(c, ["a", "b", "c", "d"])
        assert -1.0 <= value < 0.5


# ---------------------------------------------------------------- curve


class TestCurve:
    def test_check_requires_increasing_ks(self):
        with pytest.raises(InvalidConfig):
            coh.CoherenceCurve(points=[(3, 0.5), (2, 0.4)], best_k=3).check()

    def test_check_requires_best_at_max(self):
        with pytest.raises(InvalidConfig):
            coh.CoherenceCurve(points=[(2, 0.5), (3, 0.9)], best_k=2).check()

    def test_tie_prefers_smallest_k(self):
        curve = coh.CoherenceCurve(points=[(2, 0.7), (3, 0.7), (5, 0.1)], best_k=2)
        curve.check()
        with pytest.raises(InvalidConfig):
            coh.CoherenceCurve(points=[(2, 0.7), (3, 0.7)], best_k=3).check()

    def test_round_trip(self, tmp_path):
        curve = coh.CoherenceCurve(points=[(2, 0.25), (3, 0.5), (8, -0.125)], best_k=3)
        path = tmp_path / "coherence.csv"
        coh.save_curve(curve, path)
        text = path.read_text(encoding="utf-8")
        assert text.splitlines()[0] == "k,c_v"
        loaded = coh.load_curve(path)
        assert loaded.best_k == 3
        assert loaded.points == [(2, 0.25), (3, 0.5), (8, -0.125)]

    def test_load_rejects_missing_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("2,0.5\n", encoding="utf-8")
        with pytest.raises(InvalidConfig):
            coh.load_curve(path)


# ---------------------------------------------------------------- sweep


class TestSweep:
    def test_recovers_planted_k(self):
        bows, vocab, doc_words = block_corpus(docs_per_block=40)
        counts = coh.window_counts(doc_words, 110)
        base = lda.LdaConfig(k=1, alpha=1.0, passes=60, burn_in=30, sample_lag=5, seed=7)
        curve = coh.sweep_k(bows, vocab, counts, [2, 3, 5, 8], base, top_n=20)
        assert [k for k, _ in curve.points] == [2, 3, 5, 8]
        assert curve.best_k == 3

    def test_empty_k_values(self):
        bows, vocab, doc_words = block_corpus(docs_per_block=2)
        counts = coh.window_counts(doc_words, 110)
        with pytest.raises(InvalidConfig):
            coh.sweep_k(bows, vocab, counts, [], lda.LdaConfig(k=1, alpha=1.0))

    def test_fixed_alpha_honored(self):
        bows, vocab, doc_words = block_corpus(docs_per_block=5)
        counts = coh.window_counts(doc_words, 110)
        base = lda.LdaConfig(k=1, alpha=0.5, passes=8, burn_in=4, sample_lag=2, seed=3)
        curve = coh.sweep_k(bows, vocab, counts, [2, 2, 3], base, top_n=4, auto_alpha=False)
        assert [k for k, _ in curve.points] == [2, 3]
