"""Review records, file loading, and the keep/reject filter.

Input files are JSONL or CSV with the columns/keys: app_id, store, text,
and optionally id, rating, posted_at. Records without an id get a stable
content hash so reloading the same file yields the same ids.
"""

from __future__ import annotations

import csv
import datetime as dt
import hashlib
import io
import json
import re
from dataclasses import dataclass, field

from . import data, textprep
from .errors import FormatError

STORES = ("play", "appstore")

_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


@dataclass
class ReviewRecord:
    id: str
    app_id: str
    store: str
    text: str
    rating: int | None = None
    posted_at: str | None = None
    fetched_at: str = ""

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "app_id": self.app_id,
            "store": self.store,
            "text": self.text,
            "fetched_at": self.fetched_at,
        }
        if self.rating is not None:
            out["rating"] = self.rating
        if self.posted_at is not None:
            out["posted_at"] = self.posted_at
        return out


@dataclass
class ReviewBatch:
    records: list[ReviewRecord]
    next_page_token: str | None = None
    exhausted: bool = False


@dataclass
class FilterConfig:
    min_words: int = 5
    english_only: bool = True
    dedupe: bool = True
    readability_floor: float = -30.0


@dataclass
class FilterResult:
    kept: list[ReviewRecord]
    rejected: dict[str, int] = field(default_factory=dict)


def content_id(app_id: str, store: str, text: str) -> str:
    digest = hashlib.sha256(f"{app_id}\n{store}\n{text}".encode("utf-8")).hexdigest()
    return digest[:16]


def now_iso() -> str:
    return dt.datetime.now(dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def make_record(raw: dict, fetched_at: str | None = None) -> ReviewRecord:
    """Validate one raw mapping into a ReviewRecord. Raises FormatError."""
    app_id = raw.get("app_id")
    store = raw.get("store")
    text = raw.get("text")
    if not isinstance(app_id, str) or not app_id.strip():
        raise FormatError("app_id missing or empty")
    if store not in STORES:
        raise FormatError(f"store must be one of {STORES}, got {store!r}")
    if not isinstance(text, str) or not text.strip():
        raise FormatError("text missing or empty")

    rating = raw.get("rating")
    if rating is not None and rating != "":
        try:
            rating = int(rating)
        except (TypeError, ValueError):
            raise FormatError(f"rating must be an integer, got {rating!r}")
        if not 1 <= rating <= 5:
            raise FormatError(f"rating out of range: {rating}")
    else:
        rating = None

    posted_at = raw.get("posted_at")
    if posted_at is not None and posted_at != "":
        if not isinstance(posted_at, str) or not _DATE_RE.match(posted_at):
            raise FormatError(f"posted_at must be YYYY-MM-DD, got {posted_at!r}")
        try:
            dt.date.fromisoformat(posted_at)
        except ValueError:
            raise FormatError(f"posted_at is not a real date: {posted_at!r}")
    else:
        posted_at = None

    rid = raw.get("id")
    if rid is not None and rid != "":
        rid = str(rid)
    else:
        rid = content_id(app_id, store, text)

    return ReviewRecord(
        id=rid,
        app_id=app_id,
        store=store,
        text=text,
        rating=rating,
        posted_at=posted_at,
        fetched_at=fetched_at or now_iso(),
    )


def load_reviews_file(path: str) -> tuple[list[ReviewRecord], int]:
    """Load reviews from a JSONL or CSV file.

    Malformed lines are counted and skipped, not fatal. Returns
    (records, n_malformed). A file with no usable content at all raises
    FormatError.
    """
    with open(path, "r", encoding="utf-8") as fh:
        content = fh.read()
    if not content.strip():
        raise FormatError(f"empty reviews file: {path}")

    fetched = now_iso()
    lower = str(path).lower()
    if lower.endswith(".csv"):
        return _load_csv(content, fetched)
    if lower.endswith((".jsonl", ".ndjson", ".json")):
        return _load_jsonl(content, fetched)
    first = content.lstrip()[:1]
    if first == "{":
        return _load_jsonl(content, fetched)
    return _load_csv(content, fetched)


def _load_jsonl(content: str, fetched: str) -> tuple[list[ReviewRecord], int]:
    records: list[ReviewRecord] = []
    malformed = 0
    for line in content.splitlines():
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            if not isinstance(raw, dict):
                raise FormatError("line is not an object")
            records.append(make_record(raw, fetched))
        except (json.JSONDecodeError, FormatError):
            malformed += 1
    if not records and malformed == 0:
        raise FormatError("no review lines found")
    return records, malformed


def _load_csv(content: str, fetched: str) -> tuple[list[ReviewRecord], int]:
    reader = csv.DictReader(io.StringIO(content))
    if not reader.fieldnames or "text" not in reader.fieldnames:
        raise FormatError("csv file has no text column")
    records: list[ReviewRecord] = []
    malformed = 0
    for row in reader:
        try:
            records.append(make_record({k: v for k, v in row.items() if v is not None}, fetched))
        except FormatError:
            malformed += 1
    if not records and malformed == 0:
        raise FormatError("csv file has no data rows")
    return records, malformed


def is_english(text: str) -> bool:
    """Cheap language gate: mostly ASCII letters plus a known function word."""
    letters = [ch for ch in text if ch.isalpha()]
    if not letters:
        return False
    ascii_letters = sum(1 for ch in letters if ch.isascii())
    if ascii_letters / len(letters) < 0.85:
        return False
    function_words = data.wordlist("english_function_words.txt")
    for token in text.lower().split():
        stripped = "".join(ch for ch in token if ch.isalpha())
        if stripped in function_words:
            return True
    return False


def dedupe_key(record: ReviewRecord) -> tuple[str, str]:
    folded = " ".join(record.text.casefold().split())
    return (record.app_id, folded)


def filter_reviews(records: list[ReviewRecord], cfg: FilterConfig | None = None) -> FilterResult:
    """Partition records into kept reviews and per-reason reject counts.

    Reasons, applied in order per record: too_short, non_english,
    low_readability; then duplicate across the survivors (first occurrence
    wins). Every input record lands in exactly one bucket, so
    len(kept) + sum(rejected.values()) == len(records).
    """
    cfg = cfg or FilterConfig()
    rejected = {"too_short": 0, "non_english": 0, "low_readability": 0, "duplicate": 0}
    kept: list[ReviewRecord] = []
    seen: set[tuple[str, str]] = set()
    for rec in records:
        if len(rec.text.split()) < cfg.min_words:
            rejected["too_short"] += 1
            continue
        if cfg.english_only and not is_english(rec.text):
            rejected["non_english"] += 1
            continue
        if textprep.readability(rec.text) < cfg.readability_floor:
            rejected["low_readability"] += 1
            continue
        if cfg.dedupe:
            key = dedupe_key(rec)
            if key in seen:
                rejected["duplicate"] += 1
                continue
            seen.add(key)
        kept.append(rec)
    return FilterResult(kept=kept, rejected=rejected)
