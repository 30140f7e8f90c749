import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ethos import textprep as tp


class TestCleanText:
    def test_strips_urls_tags_emoji(self):
        assert tp.clean_text("Great app!! Visit https://x.io <b>now</b> \U0001f600") == "great app visit now"

    def test_strips_numeric_dates(self):
        assert tp.clean_text("Helped me on 12/05/2023 a lot") == "helped me on a lot"

    def test_lowercases_and_trims(self):
        assert tp.clean_text("  MiXeD CaSe  ") == "mixed case"

    def test_month_name_dates(self):
        assert tp.clean_text("crashed on March 3rd, 2024 again") == "crashed on again"
        assert tp.clean_text("since jan 5 it works") == "since it works"

    def test_iso_and_day_month_shapes(self):
        assert tp.clean_text("from 2023-05-12 to 6/7") == "from to"

    def test_www_urls(self):
        assert tp.clean_text("see www.example.com/page for info") == "see for info"

    def test_keeps_plain_numbers(self):
        assert tp.clean_text("gave it 5 stars") == "gave it 5 stars"

    def test_empty_and_symbol_only(self):
        assert tp.clean_text("") == ""
        assert tp.clean_text("!!! ... \U0001f62d") == ""

    def test_charset_invariant(self):
        out = tp.clean_text("Weird <i>input</i>: café ❤ 100% https://a.b JUNE 1")
        assert set(out) <= set(string.ascii_lowercase + string.digits + " ")
        assert "  " not in out
        assert out == out.strip()

    @settings(max_examples=300, deadline=None)
    @given(st.text(max_size=200))
    def test_idempotent(self, s):
        once = tp.clean_text(s)
        assert tp.clean_text(once) == once

    @settings(max_examples=200, deadline=None)
    @given(st.text(max_size=200))
    def test_output_charset(self, s):
        out = tp.clean_text(s)
        assert set(out) <= set(string.ascii_lowercase + string.digits + " ")
        assert "  " not in out


class TestTokenize:
    def test_splits_on_spaces(self):
        assert tp.tokenize("a bb ccc") == ["a", "bb", "ccc"]

    def test_empty(self):
        assert tp.tokenize("") == []


class TestSlang:
    def test_multiword_expansion(self):
        assert tp.expand_slang(["tbh"]) == ["to", "be", "honest"]

    def test_single_word(self):
        assert tp.expand_slang(["rlly", "gud"]) == ["really", "good"]

    def test_unknown_passthrough(self):
        assert tp.expand_slang(["calm", "helpful"]) == ["calm", "helpful"]

    def test_position_preserved(self):
        assert tp.expand_slang(["its", "rlly", "nice"]) == ["its", "really", "nice"]


class TestLemmatize:
    def test_spec_pair(self):
        assert tp.lemmatize(["feelings", "helped"]) == ["feeling", "help"]

    def test_short_lemmas_dropped(self):
        assert tp.lemmatize(["is"]) == []
        assert tp.lemmatize(["is"], keep_short=True) == ["be"]

    def test_lookup_wins_over_rules(self):
        assert tp.lemmatize_token("said") == "say"
        assert tp.lemmatize_token("sold") == "sell"
        assert tp.lemmatize_token("better") == "good"

    def test_plural_rules(self):
        assert tp.lemmatize_token("developers") == "developer"
        assert tp.lemmatize_token("issues") == "issue"
        assert tp.lemmatize_token("worries") == "worry"
        assert tp.lemmatize_token("crashes") == "crash"
        assert tp.lemmatize_token("responses") == "response"

    def test_ing_ed_rules(self):
        assert tp.lemmatize_token("listening") == "listen"
        assert tp.lemmatize_token("running") == "run"
        assert tp.lemmatize_token("stopped") == "stop"
        assert tp.lemmatize_token("asked") == "ask"

    def test_protected_forms(self):
        assert tp.lemmatize_token("rating") == "rating"
        assert tp.lemmatize_token("nothing") == "nothing"
        assert tp.lemmatize_token("during") == "during"
        assert tp.lemmatize_token("news") == "news"
        assert tp.lemmatize_token("always") == "always"

    def test_no_double_stripping(self):
        # one rule at most: the -s pass must not feed the -ing pass
        assert tp.lemmatize_token("feelings") == "feeling"

    def test_guard_against_short_stems(self):
        assert tp.lemmatize_token("sing") == "sing"
        assert tp.lemmatize_token("thing") == "thing"
        assert tp.lemmatize_token("this") == "this"
        assert tp.lemmatize_token("gas") == "gas"


class TestStopwords:
    def test_general_and_domain(self):
        out = tp.remove_stopwords(["the", "app", "wysa", "privacy", "help"])
        assert out == ["privacy", "help"]

    def test_explicit_set(self):
        assert tp.remove_stopwords(["aaa", "bbb"], frozenset(["bbb"])) == ["aaa"]


class TestNormalize:
    def test_full_chain(self):
        out = tp.normalize("TBH this app rlly helped my feelings!! 😊")
        assert out == ["honest", "help", "feeling"]

    def test_sentiment_chain_keeps_negators(self):
        out = tp.sentiment_tokens("It did NOT help me at all.")
        assert "not" in out
        assert "help" in out


class TestReadability:
    def test_simple_text_scores_high(self):
        assert tp.readability("I like it. It is good.") > 80

    def test_dense_text_scores_lower(self):
        simple = tp.readability("The app helps me sleep.")
        dense = tp.readability(
            "Notwithstanding considerable implementational idiosyncrasies, "
            "psychoeducational interventions demonstrate unparalleled efficaciousness."
        )
        assert dense < simple

    def test_no_words_is_max(self):
        assert tp.readability("12345 !!!") == pytest.approx(206.835)

    def test_syllables(self):
        assert tp.syllable_count("app") == 1
        assert tp.syllable_count("amazing") == 3
        assert tp.syllable_count("love") == 1
        assert tp.syllable_count("") == 0


class TestCorpusStats:
    def test_hand_computed(self):
        texts = ["I love it. Works well!", "bad"]
        s = tp.corpus_stats(texts)
        assert s.n_reviews == 2
        assert s.total_sentences == 3
        assert s.min_sentences == 1 and s.max_sentences == 2
        assert s.avg_sentences == 1.5
        assert s.total_words == 6
        assert s.min_words == 1 and s.max_words == 5
        assert s.avg_words == 3.0
        assert s.total_chars == len(texts[0]) + len(texts[1])
        assert s.avg_chars == round((len(texts[0]) + len(texts[1])) / 2, 2)

    def test_empty(self):
        s = tp.corpus_stats([])
        assert s.n_reviews == 0
        assert s.total_words == 0

    def test_rounding(self):
        s = tp.corpus_stats(["one two three", "one two", "one"])
        assert s.avg_words == 2.0
        s2 = tp.corpus_stats(["a b", "c"])
        assert s2.avg_words == 1.5

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.text(min_size=1, max_size=80), min_size=1, max_size=20))
    def test_order_invariants(self, texts):
        s = tp.corpus_stats(texts)
        assert s.min_words <= s.avg_words <= s.max_words
        assert s.min_sentences <= s.avg_sentences <= s.max_sentences
        assert s.min_chars <= s.avg_chars <= s.max_chars
        assert s.min_sentences >= 1
