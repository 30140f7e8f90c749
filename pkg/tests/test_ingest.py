import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ethos import records as rec
from ethos import stores
from ethos.errors import AppNotFound, FormatError, NetworkError, RateLimited


def mk(text, app_id="wysa", store="play", **kw):
    return rec.make_record({"app_id": app_id, "store": store, "text": text, **kw})


class TestMakeRecord:
    def test_minimal(self):
        r = mk("This app helped me sleep at night")
        assert r.app_id == "wysa" and r.store == "play"
        assert r.rating is None and r.posted_at is None
        assert r.fetched_at

    def test_content_id_is_stable(self):
        a = mk("same text here for hashing")
        b = mk("same text here for hashing")
        assert a.id == b.id
        assert a.id == rec.content_id("wysa", "play", "same text here for hashing")

    def test_explicit_id_kept(self):
        assert mk("whatever text", id="r-77").id == "r-77"

    def test_rating_parsed(self):
        assert mk("text", rating=4).rating == 4
        assert mk("text", rating="5").rating == 5

    def test_bad_store(self):
        with pytest.raises(FormatError):
            mk("text", store="amazon")

    def test_missing_text(self):
        with pytest.raises(FormatError):
            rec.make_record({"app_id": "a", "store": "play", "text": "   "})

    def test_bad_rating(self):
        with pytest.raises(FormatError):
            mk("text", rating="five")
        with pytest.raises(FormatError):
            mk("text", rating=9)

    def test_bad_date(self):
        with pytest.raises(FormatError):
            mk("text", posted_at="05/12/2023")
        with pytest.raises(FormatError):
            mk("text", posted_at="2023-02-31")

    def test_good_date(self):
        assert mk("text", posted_at="2023-02-28").posted_at == "2023-02-28"


class TestLoadFile:
    def test_jsonl_with_malformed(self, tmp_path):
        p = tmp_path / "r.jsonl"
        lines = [
            json.dumps({"app_id": "wysa", "store": "play", "text": "good app helped me a lot"}),
            "{broken json",
            json.dumps({"app_id": "wysa", "store": "nope", "text": "bad store"}),
            json.dumps({"app_id": "woebot", "store": "appstore", "text": "calm and kind", "rating": 5}),
        ]
        p.write_text("\n".join(lines), encoding="utf-8")
        loaded, malformed = rec.load_reviews_file(str(p))
        assert len(loaded) == 2
        assert malformed == 2
        assert loaded[1].rating == 5

    def test_empty_file_raises(self, tmp_path):
        p = tmp_path / "r.jsonl"
        p.write_text("   \n", encoding="utf-8")
        with pytest.raises(FormatError):
            rec.load_reviews_file(str(p))

    def test_csv(self, tmp_path):
        p = tmp_path / "r.csv"
        p.write_text(
            "app_id,store,text,rating\n"
            "wysa,play,really nice and calm app,4\n"
            "wysa,play,,\n",
            encoding="utf-8",
        )
        loaded, malformed = rec.load_reviews_file(str(p))
        assert len(loaded) == 1 and malformed == 1
        assert loaded[0].rating == 4

    def test_csv_needs_text_column(self, tmp_path):
        p = tmp_path / "r.csv"
        p.write_text("a,b\n1,2\n", encoding="utf-8")
        with pytest.raises(FormatError):
            rec.load_reviews_file(str(p))

    def test_sniffs_jsonl_without_extension(self, tmp_path):
        p = tmp_path / "reviews.dat"
        p.write_text(json.dumps({"app_id": "a", "store": "play", "text": "five whole words right here"}), encoding="utf-8")
        loaded, malformed = rec.load_reviews_file(str(p))
        assert len(loaded) == 1 and malformed == 0


class TestEnglishHeuristic:
    def test_english_passes(self):
        assert rec.is_english("This app helped me with my anxiety")

    def test_accented_fails(self):
        assert not rec.is_english("esta aplicación nos ayudó muchísimo cada día según mamá")

    def test_function_word_shortcut(self):
        # mostly-ASCII text still needs one everyday English word
        assert rec.is_english("the zorbulax frimbled quorply")

    def test_cjk_fails(self):
        assert not rec.is_english("这个应用很棒很有帮助")

    def test_ascii_gibberish_fails(self):
        assert not rec.is_english("zxcv qwerty plonk snarf blat")

    def test_no_letters_fails(self):
        assert not rec.is_english("12345 678")


def make_records(texts, app_id="wysa"):
    return [mk(t, app_id=app_id) for t in texts]


class TestFilter:
    def test_all_reasons(self):
        records = [
            mk("I use this every day and it helps"),
            mk("too short"),
            mk("esta aplicación nos ayudó muchísimo cada día según"),
            mk("I use this every day and it helps"),
        ]
        result = rec.filter_reviews(records)
        assert len(result.kept) == 1
        assert result.rejected == {
            "too_short": 1,
            "non_english": 1,
            "low_readability": 0,
            "duplicate": 1,
        }

    def test_partition_invariant(self):
        records = make_records(
            ["one two three four five", "tiny", "I love how calm this makes me feel"]
        )
        result = rec.filter_reviews(records)
        assert len(result.kept) + sum(result.rejected.values()) == len(records)

    def test_duplicate_keeps_earliest(self):
        a = mk("This Is My   Review of the app", id="first")
        b = mk("this is my review OF the app", id="second")
        result = rec.filter_reviews([a, b])
        assert [r.id for r in result.kept] == ["first"]
        assert result.rejected["duplicate"] == 1

    def test_duplicate_other_app_kept(self):
        a = mk("the same words in this review", app_id="wysa")
        b = mk("the same words in this review", app_id="woebot")
        result = rec.filter_reviews([a, b])
        assert len(result.kept) == 2

    def test_dedupe_off(self):
        a = mk("the same words in this review")
        b = mk("the same words in this review")
        cfg = rec.FilterConfig(dedupe=False)
        assert len(rec.filter_reviews([a, b], cfg).kept) == 2

    def test_idempotent(self):
        records = make_records(
            [
                "I use this every day and it helps",
                "too short",
                "I use this every day and it helps",
                "Nice bot that listens when I cannot sleep",
            ]
        )
        first = rec.filter_reviews(records)
        second = rec.filter_reviews(first.kept)
        assert [r.id for r in second.kept] == [r.id for r in first.kept]
        assert sum(second.rejected.values()) == 0

    def test_min_words_config(self):
        cfg = rec.FilterConfig(min_words=3)
        result = rec.filter_reviews([mk("just three words")], cfg)
        assert len(result.kept) == 1

    def test_readability_gate(self):
        cfg = rec.FilterConfig(readability_floor=-30.0)
        monster = mk(
            "The antidisestablishmentarianism institutionalization "
            "incomprehensibilities deinstitutionalization counterrevolutionaries"
        )
        result = rec.filter_reviews([monster], cfg)
        assert result.rejected["low_readability"] == 1

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(
            st.text(alphabet="abcdefg the and", min_size=1, max_size=60).map(
                lambda t: mk(t if t.strip() else "x")
            ),
            max_size=30,
        )
    )
    def test_partition_property(self, records):
        result = rec.filter_reviews(records)
        assert len(result.kept) + sum(result.rejected.values()) == len(records)
        again = rec.filter_reviews(result.kept)
        assert len(again.kept) == len(result.kept)


FEED_PAGE_1 = {
    "feed": {
        "entry": [
            {"im:name": {"label": "Wysa"}, "id": {"label": "app-meta"}},
            {
                "id": {"label": "rev-1"},
                "im:rating": {"label": "5"},
                "content": {"label": "Calm and kind, helped my anxiety a lot"},
                "updated": {"label": "2024-03-05T10:00:00-07:00"},
            },
            {
                "id": {"label": "rev-2"},
                "im:rating": {"label": "2"},
                "content": {"label": "Subscription is too expensive for students"},
                "updated": {"label": "2024-03-04T09:00:00-07:00"},
            },
        ]
    }
}
FEED_EMPTY = {"feed": {}}


@pytest.fixture
def cache(tmp_path, monkeypatch):
    cache_dir = tmp_path / "http_cache"
    cache_dir.mkdir()
    monkeypatch.setenv("ETHOS_HTTP_CACHE", str(cache_dir))
    return str(cache_dir)


class TestAppstoreFetch:
    def test_parses_reviews_and_skips_metadata(self, cache):
        stores.write_cache_entry(cache, stores.appstore_url("123", "us", 1), 200, FEED_PAGE_1)
        batch = stores.fetch_appstore_reviews("123")
        assert [r.id for r in batch.records] == ["rev-1", "rev-2"]
        assert batch.records[0].rating == 5
        assert batch.records[0].posted_at == "2024-03-05"
        assert batch.records[0].store == "appstore"
        assert not batch.exhausted
        assert batch.next_page_token == "2"

    def test_exhausted_on_empty_page(self, cache):
        stores.write_cache_entry(cache, stores.appstore_url("123", "us", 2), 200, FEED_EMPTY)
        batch = stores.fetch_appstore_reviews("123", page=2)
        assert batch.exhausted and batch.records == []

    def test_404_raises(self, cache):
        stores.write_cache_entry(cache, stores.appstore_url("999", "us", 1), 404, {})
        with pytest.raises(AppNotFound):
            stores.fetch_appstore_reviews("999")

    def test_429_raises(self, cache):
        stores.write_cache_entry(cache, stores.appstore_url("123", "us", 1), 429, {})
        with pytest.raises(RateLimited):
            stores.fetch_appstore_reviews("123")

    def test_cache_miss_raises(self, cache):
        with pytest.raises(NetworkError):
            stores.fetch_appstore_reviews("not-recorded")

    def test_fetch_reviews_pages_until_exhausted(self, cache):
        stores.write_cache_entry(cache, stores.appstore_url("123", "us", 1), 200, FEED_PAGE_1)
        stores.write_cache_entry(cache, stores.appstore_url("123", "us", 2), 200, FEED_EMPTY)
        out = stores.fetch_reviews("appstore", "123", max_pages=10)
        assert len(out) == 2


class TestPlayFetch:
    def test_paginates_with_tokens(self, cache):
        page1 = {
            "reviews": [
                {"reviewId": "p-1", "content": "Good bot but ads everywhere now", "score": 3, "at": "2024-01-02 11:22"},
            ],
            "nextPageToken": "tok2",
        }
        page2 = {"reviews": [{"reviewId": "p-2", "content": "Privacy policy is scary vague", "score": 1, "at": "2024-01-03"}], "nextPageToken": None}
        stores.write_cache_entry(cache, stores.play_url("app.x", "us", None), 200, page1)
        stores.write_cache_entry(cache, stores.play_url("app.x", "us", "tok2"), 200, page2)
        out = stores.fetch_reviews("play", "app.x", max_pages=5)
        assert [r.id for r in out] == ["p-1", "p-2"]
        assert out[0].posted_at == "2024-01-02"
        assert out[0].store == "play"

    def test_unexpected_payload(self, cache):
        stores.write_cache_entry(cache, stores.play_url("app.x", "us", None), 200, {"whatever": 1})
        with pytest.raises(FormatError):
            stores.fetch_play_reviews("app.x")

    def test_unknown_store(self):
        with pytest.raises(FormatError):
            stores.fetch_reviews("amazon", "x")
