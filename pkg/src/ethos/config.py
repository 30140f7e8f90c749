"""Run configuration: defaults, flat key=value files, CLI overrides.

A config file is plain text, one ``key = value`` per line, # comments and
blank lines allowed. Every key has a typed default below; unknown keys and
badly typed values raise ConfigError so typos surface early instead of
silently running with defaults.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError


@dataclass
class EthosConfig:
    # randomness and topic count; k == 0 means take best_k from the sweep
    seed: int = 7
    k: int = 0
    sweep_k_values: tuple[int, ...] = (2, 3, 4, 5, 6, 8, 10)

    # review filtering
    min_words: int = 5
    english_only: bool = True
    dedupe: bool = True
    readability_floor: float = -30.0

    # vocabulary and phrase detection
    min_doc_freq: int = 5
    max_doc_fraction: float = 0.5
    phrase_min_count: int = 5
    phrase_threshold: float = 10.0
    phrase_passes: int = 2

    # topic model
    alpha: float = 0.0  # 0 means 50 / k
    beta: float = 0.01
    passes: int = 200
    burn_in: int = 100
    sample_lag: int = 10
    chunk_size: int = 2000

    # coherence
    window_size: int = 110
    top_words: int = 20

    # taxonomy alignment
    threshold: float = 0.5
    tau_doc: float = 0.2
    embed_provider: str = "static"
    embed_url: str = ""

    # sentiment
    absa_provider: str = "lexicon"
    absa_url: str = ""
    negation_window: int = 3
    aspect_window: int = 6

    # store scraping
    country: str = "us"
    max_pages: int = 10

    # reporting
    report_formats: tuple[str, ...] = ("json", "csv", "md")
    figures: bool = True

    # audit server
    host: str = "127.0.0.1"
    port: int = 8787

    def effective_alpha(self, k: int) -> float:
        return self.alpha if self.alpha > 0 else 50.0 / k

    def snapshot(self) -> dict:
        """JSON-stable dict of every setting, for run manifests."""
        out = {}
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = list(value)
            out[f.name] = value
        return out


_FIELDS = {f.name: f for f in dataclasses.fields(EthosConfig)}


def _parse_value(key: str, raw: str):
    f = _FIELDS[key]
    default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
    raw = raw.strip()
    try:
        if isinstance(default, bool):
            low = raw.lower()
            if low in ("true", "yes", "1", "on"):
                return True
            if low in ("false", "no", "0", "off"):
                return False
            raise ValueError(f"not a boolean: {raw!r}")
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            return float(raw)
        if isinstance(default, tuple):
            items = [p.strip() for p in raw.split(",") if p.strip()]
            if all(isinstance(x, int) for x in default) and default:
                return tuple(int(p) for p in items)
            return tuple(items)
        return raw
    except ValueError as exc:
        raise ConfigError(f"config key {key}: {exc}") from exc


def parse_config_text(text: str, source: str = "<config>") -> dict:
    """Parse flat key=value text into a {field: typed value} dict."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FIELDS:
            raise ConfigError(f"{source}:{lineno}: unknown config key {key!r}")
        values[key] = _parse_value(key, value)
    return values


def load_config(path: str | Path | None = None, overrides: dict | None = None) -> EthosConfig:
    """Build a config from defaults, then a file, then explicit overrides.

    Overrides use field names as keys; values may be already typed or raw
    strings (strings go through the same parser as file values).
    """
    cfg = EthosConfig()
    merged: dict = {}
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file not found: {p}")
        merged.update(parse_config_text(p.read_text(encoding="utf-8"), str(p)))
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in _FIELDS:
            raise ConfigError(f"unknown config key {key!r}")
        merged[key] = _parse_value(key, value) if isinstance(value, str) else value
    for key, value in merged.items():
        setattr(cfg, key, value)
    _validate(cfg)
    return cfg


def _validate(cfg: EthosConfig) -> None:
    if cfg.k < 0:
        raise ConfigError("k must be >= 0")
    if cfg.beta <= 0:
        raise ConfigError("beta must be positive")
    if cfg.alpha < 0:
        raise ConfigError("alpha must be >= 0")
    if cfg.passes < 1:
        raise ConfigError("passes must be >= 1")
    if cfg.burn_in < 0:
        raise ConfigError("burn_in must be >= 0")
    if cfg.sample_lag < 1:
        raise ConfigError("sample_lag must be >= 1")
    if not (0.0 <= cfg.threshold <= 1.0):
        raise ConfigError("threshold must be in [0, 1]")
    if not (0.0 <= cfg.tau_doc <= 1.0):
        raise ConfigError("tau_doc must be in [0, 1]")
    if cfg.window_size < 1:
        raise ConfigError("window_size must be >= 1")
    if cfg.min_words < 0:
        raise ConfigError("min_words must be >= 0")
    if not cfg.sweep_k_values:
        raise ConfigError("sweep_k_values must not be empty")
    if any(k < 1 for k in cfg.sweep_k_values):
        raise ConfigError("sweep_k_values must be >= 1")
    if cfg.embed_provider not in ("static", "http"):
        raise ConfigError("embed_provider must be static or http")
    if cfg.absa_provider not in ("lexicon", "http"):
        raise ConfigError("absa_provider must be lexicon or http")
    unknown = set(cfg.report_formats) - {"json", "csv", "md"}
    if unknown:
        raise ConfigError(f"unknown report formats: {sorted(unknown)}")


def dump_config(cfg: EthosConfig) -> str:
    """Render a config back to the flat file format (sorted keys)."""
    lines = []
    for key in sorted(_FIELDS):
        value = getattr(cfg, key)
        if isinstance(value, tuple):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def snapshot_json(cfg: EthosConfig) -> str:
    return json.dumps(cfg.snapshot(), sort_keys=True, indent=2) + "\n"
