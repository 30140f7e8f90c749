"""Text normalization for review corpora.

The topic-modeling path runs the full chain: clean, tokenize, slang
expansion, lemmatization (short lemmas dropped), stopword removal. The
sentiment path reuses the same chain but keeps short lemmas and skips
stopword removal, because negators and modifiers must survive there.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from . import data

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_TAG_RE = re.compile(r"<[^>]*>")

# d/m/y, y-m-d and m-d shapes with / or - separators
_NUM_DATE_RE = re.compile(r"\b\d{1,4}[/-]\d{1,2}(?:[/-]\d{1,4})?\b")

_MONTHS = (
    "january|february|march|april|may|june|july|august|september|october|"
    "november|december|jan|feb|mar|apr|jun|jul|aug|sept|sep|oct|nov|dec"
)
_NAME_DATE_RE = re.compile(
    r"\b(?:%s)\.?\s+\d{1,2}(?:st|nd|rd|th)?(?:\s*,?\s*\d{2,4})?\b" % _MONTHS
)

_NON_ALNUM_RE = re.compile(r"[^a-z0-9]+")

_MIN_LEMMA_LEN = 3

_category_cache: dict[int, bool] = {}


def _is_symbol_char(ch: str) -> bool:
    """Emoji and related marks: So/Sk/Cs plus the supplemental pictograph planes."""
    cp = ord(ch)
    cached = _category_cache.get(cp)
    if cached is None:
        cached = unicodedata.category(ch) in ("So", "Sk", "Cs") or 0x1F000 <= cp <= 0x1FAFF
        _category_cache[cp] = cached
    return cached


def clean_text(text: str) -> str:
    """Lowercase and strip markup, URLs, emoji, dates, and punctuation.

    The result contains only a-z, 0-9 and single spaces, with no leading or
    trailing space. Idempotent: cleaning cleaned text changes nothing.
    """
    s = text.lower()
    s = _URL_RE.sub(" ", s)
    s = _TAG_RE.sub(" ", s)
    s = "".join(ch for ch in s if not _is_symbol_char(ch))
    s = _NUM_DATE_RE.sub(" ", s)
    s = _NAME_DATE_RE.sub(" ", s)
    s = _NON_ALNUM_RE.sub(" ", s)
    return s.strip()


def tokenize(cleaned: str) -> list[str]:
    """Split cleaned text on whitespace. Empty input gives an empty list."""
    return cleaned.split()


def expand_slang(tokens: list[str]) -> list[str]:
    """Replace shorthand tokens with their spelled-out forms.

    Expansions may be multiword; they are re-split so downstream stages see
    ordinary tokens.
    """
    table = data.tsv_map("slang.tsv")
    out: list[str] = []
    for tok in tokens:
        expansion = table.get(tok)
        if expansion is None:
            out.append(tok)
        else:
            out.extend(expansion.split())
    return out


_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def lemmatize_token(token: str) -> str:
    """Lookup-table lemma, falling back to one deterministic suffix rule.

    At most one rule fires per token. The rules are intentionally small and
    will mangle the odd word; common casualties are protected by identity
    entries in the lookup table.
    """
    table = data.tsv_map("lemmas.tsv")
    found = table.get(token)
    if found is not None:
        return found
    n = len(token)
    # -ies -> -y (stories -> story)
    if token.endswith("ies") and n - 3 >= 2:
        return token[:-3] + "y"
    # -es after a sibilant (boxes -> box, wishes -> wish); a stem that itself
    # ends in a bare s or z nearly always lost a silent e (phrases -> phrase,
    # responses -> response), the bus/lens kind is protected by the table
    if token.endswith("es") and n - 2 >= _MIN_LEMMA_LEN:
        stem = token[:-2]
        if stem.endswith(("s", "z")) and not stem.endswith("ss"):
            return stem + "e"
        if stem.endswith(_SIBILANT_ENDINGS):
            return stem
    # plain plural -s, but not -ss/-us/-is
    if token.endswith("s") and n - 1 >= _MIN_LEMMA_LEN:
        if not token.endswith(("ss", "us", "is")):
            return token[:-1]
    # -ing with doubled-consonant undo (running -> run)
    if token.endswith("ing") and n - 3 >= _MIN_LEMMA_LEN:
        stem = token[:-3]
        if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiouls":
            stem = stem[:-1]
        return stem
    # -ed with doubled-consonant undo (stopped -> stop)
    if token.endswith("ed") and n - 2 >= _MIN_LEMMA_LEN:
        stem = token[:-2]
        if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiouls":
            stem = stem[:-1]
        return stem
    return token


def lemmatize(tokens: list[str], keep_short: bool = False) -> list[str]:
    """Lemmatize tokens, dropping lemmas shorter than three characters.

    keep_short=True keeps them; the sentiment path needs two-letter words
    like "no" intact.
    """
    out = []
    for tok in tokens:
        lemma = lemmatize_token(tok)
        if keep_short or len(lemma) >= _MIN_LEMMA_LEN:
            out.append(lemma)
    return out


def stopword_set() -> frozenset[str]:
    return data.wordlist("stopwords_en.txt") | data.wordlist("domain_stopwords.txt")


def remove_stopwords(lemmas: list[str], stopwords: frozenset[str] | None = None) -> list[str]:
    stops = stopword_set() if stopwords is None else stopwords
    return [w for w in lemmas if w not in stops]


def normalize(text: str) -> list[str]:
    """Full topic-path chain from raw text to content lemmas."""
    tokens = expand_slang(tokenize(clean_text(text)))
    return remove_stopwords(lemmatize(tokens))


def sentiment_tokens(text: str) -> list[str]:
    """Sentiment-path chain: lemmas with stopwords and short words intact."""
    tokens = expand_slang(tokenize(clean_text(text)))
    return lemmatize(tokens, keep_short=True)


@dataclass
class CleanDocument:
    review_id: str
    text: str
    tokens: list[str]
    lemmas: list[str]


def prepare(review_id: str, raw_text: str) -> CleanDocument:
    cleaned = clean_text(raw_text)
    tokens = expand_slang(tokenize(cleaned))
    lemmas = remove_stopwords(lemmatize(tokens))
    return CleanDocument(review_id=review_id, text=cleaned, tokens=tokens, lemmas=lemmas)


_VOWEL_RUN_RE = re.compile(r"[aeiouy]+")


def syllable_count(word: str) -> int:
    """Rough syllable estimate: vowel runs with a silent-e adjustment."""
    w = "".join(ch for ch in word.lower() if ch.isalpha())
    if not w:
        return 0
    runs = len(_VOWEL_RUN_RE.findall(w))
    if runs > 1 and w.endswith("e") and not w.endswith("le"):
        runs -= 1
    return max(runs, 1)


_SENTENCE_SPLIT_RE = re.compile(r"[.!?]+")


def sentence_count(text: str) -> int:
    parts = [p for p in _SENTENCE_SPLIT_RE.split(text) if p.strip()]
    return max(len(parts), 1)


def readability(text: str) -> float:
    """Flesch-style reading ease on raw text. Higher is easier.

    Returns the scale maximum when there are no alphabetic words, so empty
    or numeric-only texts never trip the readability gate.
    """
    words = [t for t in text.split() if any(ch.isalpha() for ch in t)]
    if not words:
        return 206.835
    sentences = sentence_count(text)
    syllables = sum(syllable_count(w) for w in words)
    return 206.835 - 1.015 * (len(words) / sentences) - 84.6 * (syllables / len(words))


@dataclass
class CorpusStats:
    n_reviews: int
    total_sentences: int
    total_words: int
    total_chars: int
    min_sentences: int
    avg_sentences: float
    max_sentences: int
    min_words: int
    avg_words: float
    max_words: int
    min_chars: int
    avg_chars: float
    max_chars: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def corpus_stats(texts: list[str]) -> CorpusStats:
    """Descriptive statistics over raw review texts.

    Sentences are [.!?] runs (at least one per review), words are whitespace
    tokens, chars count the raw string. Averages are rounded to 2 decimals.
    """
    if not texts:
        return CorpusStats(0, 0, 0, 0, 0, 0.0, 0, 0, 0.0, 0, 0, 0.0, 0)
    sent = [sentence_count(t) for t in texts]
    words = [len(t.split()) for t in texts]
    chars = [len(t) for t in texts]
    n = len(texts)
    return CorpusStats(
        n_reviews=n,
        total_sentences=sum(sent),
        total_words=sum(words),
        total_chars=sum(chars),
        min_sentences=min(sent),
        avg_sentences=round(sum(sent) / n, 2),
        max_sentences=max(sent),
        min_words=min(words),
        avg_words=round(sum(words) / n, 2),
        max_words=max(words),
        min_chars=min(chars),
        avg_chars=round(sum(chars) / n, 2),
        max_chars=max(chars),
    )
