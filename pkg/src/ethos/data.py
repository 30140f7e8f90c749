"""Accessors for data files bundled with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources as _res


def _read_text(name: str) -> str:
    return _res.files("ethos").joinpath("resources", name).read_text(encoding="utf-8")


def _data_lines(name: str) -> list[str]:
    out = []
    for raw in _read_text(name).splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


@lru_cache(maxsize=None)
def wordlist(name: str) -> frozenset[str]:
    """One token per line, # comments and blanks ignored."""
    return frozenset(_data_lines(name))


@lru_cache(maxsize=None)
def tsv_pairs(name: str) -> tuple[tuple[str, str], ...]:
    """Two-column TSV in file order. First occurrence of a key wins downstream."""
    pairs = []
    for line in _data_lines(name):
        key, _, value = line.partition("\t")
        pairs.append((key, value))
    return tuple(pairs)


@lru_cache(maxsize=None)
def tsv_map(name: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for key, value in tsv_pairs(name):
        mapping.setdefault(key, value)
    return mapping


def taxonomy_text(name: str) -> str:
    return _read_text(name)


def vectors_text() -> str:
    return _read_text("vectors.tsv")
