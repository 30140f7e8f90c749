"""Rendering a finished run into report files.

Three formats share one source dict: report.json carries everything,
report.csv is the ethics table as delimited rows, report.md is the
human-readable summary. Output is deterministic: stable key order, fixed
float formatting, no timestamps, so identical runs diff empty.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from . import alignment as al
from . import coherence as coh
from . import sentiment as snt
from .errors import MissingArtifacts
from .pipeline import Run, decision_state, load_topics

CSV_COLUMNS = ("ethic_id", "label", "source", "frequency_pct", "mean_sentiment", "n_reviews")


def load_sentiments(path: Path) -> list[snt.AspectSentiment]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            d = json.loads(line)
            out.append(
                snt.AspectSentiment(
                    review_id=d["review_id"],
                    aspect_id=d["aspect_id"],
                    p_pos=d["p_pos"],
                    p_neg=d["p_neg"],
                    polarity=d["polarity"],
                )
            )
    return out


def build(run: Run) -> dict:
    """Collect the run's artifacts into one report dict."""
    needed = ("stats.json", "coherence.csv", "topics.json", "alignments.json", "sentiments.jsonl", "model.json")
    missing = [n for n in needed if not run.path(n).exists()]
    if missing:
        raise MissingArtifacts(f"report needs {', '.join(missing)}; run earlier stages first")

    stats = json.loads(run.path("stats.json").read_text(encoding="utf-8"))
    curve = coh.load_curve(run.path("coherence.csv"))
    topics = load_topics(run)
    outcome = decision_state(run)
    sentiments = load_sentiments(run.path("sentiments.jsonl"))

    principles = {p.id: p for p in al.default_taxonomy(include_emergent=False)}
    for p in outcome.overlay:
        principles[p.id] = p
    n_reviews = stats["filter"]["kept"]
    rows = snt.ethics_rows(sentiments, n_reviews, principles)

    model_cfg = json.loads(run.path("model.json").read_text(encoding="utf-8"))["config"]
    return {
        "corpus": stats,
        "coherence": {"points": [[k, round(cv, 6)] for k, cv in curve.points], "best_k": curve.best_k},
        "k": model_cfg["k"],
        "topics": [
            {
                "topic_id": t.topic_id,
                "top_terms": [[w, round(p, 6)] for w, p in t.top_terms],
                "review_count": t.review_count,
            }
            for t in topics
        ],
        "alignments": [a.to_dict() for a in outcome.alignments],
        "pending_topics": list(outcome.pending),
        "ethics": [
            {
                "ethic_id": r.ethic_id,
                "label": r.label,
                "source": r.source,
                "frequency_pct": round(r.frequency_pct, 4),
                "mean_sentiment": round(r.mean_sentiment, 4),
                "n_reviews": r.n_reviews,
            }
            for r in rows
        ],
    }


# ---------------------------------------------------------------- formats


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report["ethics"]:
        writer.writerow(
            [
                row["ethic_id"],
                row["label"],
                row["source"],
                "%.2f" % row["frequency_pct"],
                "%+.2f" % row["mean_sentiment"],
                row["n_reviews"],
            ]
        )
    return buf.getvalue()


def _md_escape(text: str) -> str:
    return text.replace("|", "\\|")


def to_markdown(report: dict) -> str:
    lines: list[str] = []
    stats = report["corpus"]
    filt = stats["filter"]
    reviews = stats["reviews"]

    lines.append("# Review audit report")
    lines.append("")
    lines.append("## Corpus")
    lines.append("")
    rejected = ", ".join(f"{k} {v}" for k, v in sorted(filt["rejected"].items()))
    lines.append(f"{filt['input']} reviews in, {filt['kept']} kept ({rejected}).")
    lines.append("")
    lines.append("| metric | min | mean | max |")
    lines.append("| --- | ---: | ---: | ---: |")
    lines.append(f"| sentences | {reviews['min_sentences']} | {reviews['avg_sentences']} | {reviews['max_sentences']} |")
    lines.append(f"| words | {reviews['min_words']} | {reviews['avg_words']} | {reviews['max_words']} |")
    lines.append(f"| characters | {reviews['min_chars']} | {reviews['avg_chars']} | {reviews['max_chars']} |")
    lines.append("")

    lines.append("## Topic count selection")
    lines.append("")
    lines.append("| k | mean C_v |")
    lines.append("| ---: | ---: |")
    best = report["coherence"]["best_k"]
    for k, cv in report["coherence"]["points"]:
        marker = " (best)" if k == best else ""
        lines.append(f"| {k} | {cv:.4f}{marker} |")
    lines.append("")
    lines.append(f"Trained with k = {report['k']}.")
    lines.append("")

    lines.append("## Topics")
    lines.append("")
    lines.append("| topic | top words | reviews |")
    lines.append("| ---: | --- | ---: |")
    by_topic = {a["topic_id"]: a for a in report["alignments"]}
    for t in report["topics"]:
        words = " ".join(w for w, _ in t["top_terms"][:10])
        lines.append(f"| {t['topic_id']} | {_md_escape(words)} | {t['review_count']} |")
    lines.append("")

    lines.append("## Ethics")
    lines.append("")
    if report["ethics"]:
        lines.append("| ethic | source | frequency | sentiment | reviews |")
        lines.append("| --- | --- | ---: | ---: | ---: |")
        for row in report["ethics"]:
            lines.append(
                "| %s | %s | %.1f%% | %+.2f | %d |"
                % (
                    _md_escape(row["label"]),
                    row["source"],
                    row["frequency_pct"],
                    row["mean_sentiment"],
                    row["n_reviews"],
                )
            )
    else:
        lines.append("No topic is mapped to an ethic yet; the table is empty.")
    lines.append("")

    pending = report["pending_topics"]
    if pending:
        ids = ", ".join(str(t) for t in pending)
        lines.append(
            f"Topics awaiting review: {ids}. Each scored below the assignment "
            "threshold on every bundled principle and needs an accept, relabel, "
            "or promote decision before it joins the table above."
        )
        lines.append("")

    lines.append("## Alignment detail")
    lines.append("")
    lines.append("| topic | best principle | score | state |")
    lines.append("| ---: | --- | ---: | --- |")
    for t in report["topics"]:
        a = by_topic[t["topic_id"]]
        principle = a.get("decided_label") or a.get("best_principle") or "-"
        state = a.get("decision", "pending")
        if state == "pending" and not a.get("emergent"):
            state = "assigned"
        lines.append(f"| {t['topic_id']} | {principle} | {a['best_score']:.3f} | {state} |")
    lines.append("")
    return "\n".join(lines)


def render(run: Run) -> list[Path]:
    """Write report files (and figures when enabled); returns written paths."""
    report = build(run)
    written: list[Path] = []
    renderers = {"json": to_json, "csv": to_csv, "md": to_markdown}
    for fmt in run.cfg.report_formats:
        path = run.path(f"report.{fmt}")
        path.write_text(renderers[fmt](report), encoding="utf-8")
        written.append(path)
    if run.cfg.figures:
        from . import figures

        written.extend(figures.render_all(report, run.dir / "figures"))
    return written
