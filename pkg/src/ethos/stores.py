"""Fetching reviews from the two app stores.

All HTTP goes through one helper that honors the ETHOS_HTTP_CACHE
environment variable: when set, responses are replayed from recorded
files keyed by a hash of the URL and nothing touches the network. That
keeps tests and audits hermetic and reproducible.

Cache file format: <sha256(url)>.json containing
{"url": ..., "status": ..., "body": ...}.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

import requests

from .errors import AppNotFound, FormatError, NetworkError, RateLimited
from .records import ReviewBatch, ReviewRecord, content_id, now_iso

_TIMEOUT = 20.0

PLAY_BASE = "https://play.google.com/store/getreviews"
APPSTORE_BASE = "https://itunes.apple.com"


def cache_path(cache_dir: str, url: str) -> Path:
    key = hashlib.sha256(url.encode("utf-8")).hexdigest()
    return Path(cache_dir) / f"{key}.json"


def write_cache_entry(cache_dir: str, url: str, status: int, body) -> Path:
    """Record a response for later replay. Used by tests and audit tooling."""
    path = cache_path(cache_dir, url)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps({"url": url, "status": status, "body": body}, sort_keys=True),
        encoding="utf-8",
    )
    return path


def _check_status(url: str, status: int) -> None:
    if status == 404:
        raise AppNotFound(f"not found: {url}")
    if status == 429:
        raise RateLimited(f"rate limited: {url}")
    if status >= 400:
        raise NetworkError(f"HTTP {status} for {url}")


def http_get_json(url: str):
    cache_dir = os.environ.get("ETHOS_HTTP_CACHE")
    if cache_dir:
        path = cache_path(cache_dir, url)
        if not path.exists():
            raise NetworkError(f"no cached response for {url} ({path.name})")
        entry = json.loads(path.read_text(encoding="utf-8"))
        _check_status(url, int(entry.get("status", 200)))
        return entry.get("body")
    try:
        resp = requests.get(url, timeout=_TIMEOUT)
    except requests.RequestException as exc:
        raise NetworkError(f"request failed for {url}: {exc}") from exc
    _check_status(url, resp.status_code)
    try:
        return resp.json()
    except ValueError as exc:
        raise FormatError(f"response is not JSON: {url}") from exc


def post_cache_path(cache_dir: str, url: str, payload) -> Path:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    key = hashlib.sha256(f"{url}\n{canonical}".encode("utf-8")).hexdigest()
    return Path(cache_dir) / f"{key}.json"


def write_post_cache_entry(cache_dir: str, url: str, payload, status: int, body) -> Path:
    """Record a POST response for later replay."""
    path = post_cache_path(cache_dir, url, payload)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(
            {"url": url, "payload": payload, "status": status, "body": body},
            sort_keys=True,
        ),
        encoding="utf-8",
    )
    return path


def http_post_json(url: str, payload):
    """POST a JSON body; replayed from ETHOS_HTTP_CACHE exactly like GETs."""
    cache_dir = os.environ.get("ETHOS_HTTP_CACHE")
    if cache_dir:
        path = post_cache_path(cache_dir, url, payload)
        if not path.exists():
            raise NetworkError(f"no cached response for POST {url} ({path.name})")
        entry = json.loads(path.read_text(encoding="utf-8"))
        status = int(entry.get("status", 200))
        if status >= 400:
            raise NetworkError(f"HTTP {status} for POST {url}")
        return entry.get("body")
    try:
        resp = requests.post(url, json=payload, timeout=_TIMEOUT)
    except requests.RequestException as exc:
        raise NetworkError(f"request failed for POST {url}: {exc}") from exc
    if resp.status_code >= 400:
        raise NetworkError(f"HTTP {resp.status_code} for POST {url}")
    try:
        return resp.json()
    except ValueError as exc:
        raise FormatError(f"response is not JSON: {url}") from exc


def appstore_url(app_id: str, country: str, page: int) -> str:
    return (
        f"{APPSTORE_BASE}/{country}/rss/customerreviews/"
        f"page={page}/id={app_id}/sortby=mostrecent/json"
    )


def fetch_appstore_reviews(app_id: str, country: str = "us", page: int = 1) -> ReviewBatch:
    """One page of the iTunes customer-reviews RSS feed as JSON.

    The feed interleaves app metadata; only entries carrying a rating are
    review entries. An entry-less page means the feed is exhausted.
    """
    body = http_get_json(appstore_url(app_id, country, page))
    if not isinstance(body, dict) or "feed" not in body:
        raise FormatError("unexpected feed payload")
    entries = body["feed"].get("entry", [])
    if isinstance(entries, dict):
        entries = [entries]
    fetched = now_iso()
    records = []
    for entry in entries:
        if "im:rating" not in entry:
            continue
        text = _label(entry.get("content"))
        if not text.strip():
            continue
        rating = None
        try:
            rating = int(_label(entry.get("im:rating")))
        except (TypeError, ValueError):
            pass
        posted = _label(entry.get("updated"))[:10]
        rid = _label(entry.get("id")) or content_id(app_id, "appstore", text)
        records.append(
            ReviewRecord(
                id=rid,
                app_id=app_id,
                store="appstore",
                text=text,
                rating=rating,
                posted_at=posted if len(posted) == 10 else None,
                fetched_at=fetched,
            )
        )
    exhausted = len(records) == 0
    return ReviewBatch(
        records=records,
        next_page_token=None if exhausted else str(page + 1),
        exhausted=exhausted,
    )


def _label(node) -> str:
    if isinstance(node, dict):
        return str(node.get("label", ""))
    return ""


def play_url(app_id: str, country: str, token: str | None) -> str:
    return f"{PLAY_BASE}?appId={app_id}&country={country}&token={token or ''}"


def fetch_play_reviews(
    app_id: str, country: str = "us", page_token: str | None = None
) -> ReviewBatch:
    """One page of Play Store reviews.

    There is no stable public JSON endpoint for Play reviews, so this path
    is replay-first: point ETHOS_HTTP_CACHE at recorded payloads of the
    shape {"reviews": [{reviewId, content, score, at}], "nextPageToken"}.
    """
    body = http_get_json(play_url(app_id, country, page_token))
    if not isinstance(body, dict) or "reviews" not in body:
        raise FormatError("unexpected play payload")
    fetched = now_iso()
    records = []
    for raw in body["reviews"]:
        text = str(raw.get("content", ""))
        if not text.strip():
            continue
        rating = raw.get("score")
        try:
            rating = int(rating) if rating is not None else None
        except (TypeError, ValueError):
            rating = None
        posted = str(raw.get("at", ""))[:10]
        rid = str(raw.get("reviewId") or content_id(app_id, "play", text))
        records.append(
            ReviewRecord(
                id=rid,
                app_id=app_id,
                store="play",
                text=text,
                rating=rating if rating and 1 <= rating <= 5 else None,
                posted_at=posted if len(posted) == 10 else None,
                fetched_at=fetched,
            )
        )
    token = body.get("nextPageToken") or None
    exhausted = not records or token is None
    return ReviewBatch(records=records, next_page_token=token, exhausted=exhausted)


def fetch_reviews(
    store: str, app_id: str, country: str = "us", max_pages: int = 10
) -> list[ReviewRecord]:
    """Page through a store feed until exhaustion or the page budget."""
    out: list[ReviewRecord] = []
    if store == "appstore":
        page = 1
        while page <= max_pages:
            batch = fetch_appstore_reviews(app_id, country, page)
            out.extend(batch.records)
            if batch.exhausted:
                break
            page += 1
    elif store == "play":
        token: str | None = None
        for _ in range(max_pages):
            batch = fetch_play_reviews(app_id, country, token)
            out.extend(batch.records)
            if batch.exhausted:
                break
            token = batch.next_page_token
    else:
        raise FormatError(f"unknown store: {store}")
    return out
