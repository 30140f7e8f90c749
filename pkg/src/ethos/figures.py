"""Matplotlib figures rendered next to the report files.

Everything draws through the Agg backend so runs work headless, and
savefig metadata is pinned so identical runs write identical PNGs.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

DPI = 120
_META = {"Software": None, "Creation Time": None}


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=DPI, bbox_inches="tight", metadata=_META)
    plt.close(fig)


def coherence_curve(report: dict, path: Path) -> None:
    points = report["coherence"]["points"]
    best_k = report["coherence"]["best_k"]
    ks = [k for k, _ in points]
    cvs = [cv for _, cv in points]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(ks, cvs, marker="o", color="#30607a")
    best_cv = dict(points)[best_k]
    ax.scatter([best_k], [best_cv], color="#b4462d", zorder=3, label=f"best k = {best_k}")
    ax.set_xlabel("number of topics")
    ax.set_ylabel("mean C_v")
    ax.set_xticks(ks)
    ax.legend(frameon=False)
    ax.grid(alpha=0.25)
    _save(fig, path)


def ethics_frequency(report: dict, path: Path) -> None:
    rows = report["ethics"]
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.45 * len(rows) + 1.2)))
    if rows:
        labels = [r["label"] for r in rows][::-1]
        freqs = [r["frequency_pct"] for r in rows][::-1]
        sents = [r["mean_sentiment"] for r in rows][::-1]
        colors = ["#2e7d4f" if s >= 0 else "#b4462d" for s in sents]
        bars = ax.barh(labels, freqs, color=colors)
        for bar, s in zip(bars, sents):
            ax.text(
                bar.get_width() + 0.3,
                bar.get_y() + bar.get_height() / 2,
                f"{s:+.2f}",
                va="center",
                fontsize=8,
            )
        ax.set_xlabel("% of reviews")
    else:
        ax.text(0.5, 0.5, "no mapped ethics yet", ha="center", va="center")
        ax.set_axis_off()
    _save(fig, path)


def topic_sizes(report: dict, path: Path) -> None:
    topics = report["topics"]
    ids = [t["topic_id"] for t in topics]
    counts = [t["review_count"] for t in topics]
    words = [" ".join(w for w, _ in t["top_terms"][:3]) for t in topics]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar([str(i) for i in ids], counts, color="#30607a")
    for x, c, w in zip(range(len(ids)), counts, words):
        ax.text(x, c, f" {w}", rotation=90, ha="center", va="bottom", fontsize=7)
    ax.set_xlabel("topic")
    ax.set_ylabel("primary reviews")
    ax.margins(y=0.25)
    _save(fig, path)


def render_all(report: dict, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = (
        ("coherence.png", coherence_curve),
        ("ethics.png", ethics_frequency),
        ("topics.png", topic_sizes),
    )
    written = []
    for name, fn in jobs:
        path = out_dir / name
        fn(report, path)
        written.append(path)
    return written
