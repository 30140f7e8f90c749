import { PAGE_SIZE } from "./store";
import type {
  AlignmentEntry,
  AlignmentState,
  DecisionBody,
  ReportData,
  ReviewSample,
  TopicSummary,
} from "./types";

export interface Handlers {
  onOpen(topicId: number | null): void;
  onPage(page: number): void;
  onDecide(topicId: number, body: DecisionBody): void;
  onRetry(): void;
  onDismissToast(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/** Human-readable state of a topic, derived the same way the report does it. */
export function badgeFor(entry: AlignmentEntry): string {
  if (entry.decision === "pending") {
    return entry.emergent ? "pending review" : "assigned";
  }
  return entry.decision;
}

/** Score list in display order: best principle first, ties by id. */
export function sortedScores(entry: AlignmentEntry): [string, number][] {
  return Object.entries(entry.scores).sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]));
}

export function connectionBanner(onRetry: () => void): HTMLElement {
  const banner = el("div", "banner");
  banner.setAttribute("role", "alert");
  banner.append(el("span", undefined, "Cannot reach the audit server. Showing the last data loaded."));
  const retry = el("button", "retry", "Retry");
  retry.addEventListener("click", onRetry);
  banner.append(retry);
  return banner;
}

export function toastView(message: string, onDismiss: () => void): HTMLElement {
  const toast = el("div", "toast");
  toast.setAttribute("role", "status");
  toast.append(el("span", undefined, message));
  const close = el("button", "dismiss", "Dismiss");
  close.addEventListener("click", onDismiss);
  toast.append(close);
  return toast;
}

export function emptyState(): HTMLElement {
  const box = el("div", "empty-state");
  box.append(el("h2", undefined, "No topics yet"));
  box.append(
    el(
      "p",
      undefined,
      "This run contains no trained topics. Execute the analysis pipeline against your corpus, then reload this page.",
    ),
  );
  return box;
}

export function topicTable(
  topics: TopicSummary[],
  alignments: AlignmentState | null,
  page: number,
  selected: number | null,
  handlers: Pick<Handlers, "onOpen" | "onPage">,
): HTMLElement {
  const wrap = el("section", "topic-browser");
  wrap.append(el("h2", undefined, "Topics"));
  const byTopic = new Map((alignments?.alignments ?? []).map((a) => [a.topic_id, a]));

  const table = el("table", "topic-table");
  const head = el("tr");
  for (const col of ["topic", "top words", "reviews", "C_v", "state"]) {
    head.append(el("th", undefined, col));
  }
  const thead = el("thead");
  thead.append(head);
  table.append(thead);
  const body = el("tbody");

  const start = page * PAGE_SIZE;
  for (const topic of topics.slice(start, start + PAGE_SIZE)) {
    const row = el("tr", topic.topic_id === selected ? "selected" : undefined);
    row.dataset.topicId = String(topic.topic_id);
    row.append(el("td", "topic-id", String(topic.topic_id)));
    row.append(el("td", "top-words", topic.top_terms.map(([w]) => w).join(" ")));
    row.append(el("td", "review-count", String(topic.review_count)));
    row.append(el("td", "coherence", topic.coherence.toFixed(3)));
    const entry = byTopic.get(topic.topic_id);
    row.append(el("td", "state", entry ? badgeFor(entry) : ""));
    row.addEventListener("click", () => handlers.onOpen(topic.topic_id));
    body.append(row);
  }
  table.append(body);
  wrap.append(table);

  const pages = Math.ceil(topics.length / PAGE_SIZE);
  if (pages > 1) {
    const nav = el("div", "pager");
    const prev = el("button", "prev", "Previous");
    prev.disabled = page === 0;
    prev.addEventListener("click", () => handlers.onPage(page - 1));
    const next = el("button", "next", "Next");
    next.disabled = page >= pages - 1;
    next.addEventListener("click", () => handlers.onPage(page + 1));
    nav.append(prev, el("span", "page-label", `Page ${page + 1} of ${pages}`), next);
    wrap.append(nav);
  }
  return wrap;
}

export function pendingQueue(
  pending: number[],
  onOpen: (topicId: number) => void,
): HTMLElement {
  const box = el("section", "pending-queue");
  box.append(el("h2", undefined, "Pending emergent topics"));
  box.append(el("span", "pending-count", String(pending.length)));
  const list = el("div", "pending-list");
  for (const tid of pending) {
    const chip = el("button", "pending-chip", `topic ${tid}`);
    chip.dataset.topicId = String(tid);
    chip.addEventListener("click", () => onOpen(tid));
    list.append(chip);
  }
  if (!pending.length) list.append(el("span", "all-clear", "none"));
  box.append(list);
  return box;
}

function decisionControls(
  entry: AlignmentEntry,
  alignments: AlignmentState,
  busy: boolean,
  onDecide: Handlers["onDecide"],
): HTMLElement {
  const box = el("fieldset", "decision-controls");
  box.append(el("legend", undefined, "Decision"));
  const validation = el("p", "validation");

  const noteInput = el("input", "note-input");
  noteInput.id = `note-${entry.topic_id}`;
  noteInput.placeholder = "optional note";

  const note = () => noteInput.value.trim() || undefined;
  const allButtons: HTMLButtonElement[] = [];

  const actionRow = el("div", "action-row");
  if (!entry.emergent) {
    const accept = el("button", "accept", "Accept");
    accept.addEventListener("click", () =>
      onDecide(entry.topic_id, { action: "accept", note: note() }),
    );
    actionRow.append(accept);
    allButtons.push(accept);
  }
  const reject = el("button", "reject", "Reject");
  reject.addEventListener("click", () =>
    onDecide(entry.topic_id, { action: "reject", note: note() }),
  );
  actionRow.append(reject);
  allButtons.push(reject);
  box.append(actionRow);

  // relabel to a principle the run already knows about
  const knownIds = Object.keys(entry.scores);
  const overlayIds = alignments.overlay.map((p) => p.id);
  const select = el("select", "relabel-select");
  select.id = `relabel-${entry.topic_id}`;
  const blank = el("option", undefined, "choose a principle");
  blank.value = "";
  select.append(blank);
  for (const pid of [...knownIds, ...overlayIds]) {
    const opt = el("option", undefined, pid);
    opt.value = pid;
    select.append(opt);
  }
  const relabel = el("button", "relabel", "Relabel");
  relabel.addEventListener("click", () => {
    if (!select.value) {
      validation.textContent = "Pick a principle to relabel to first.";
      return;
    }
    onDecide(entry.topic_id, { action: "relabel", label: select.value, note: note() });
  });
  allButtons.push(relabel);
  const relabelRow = el("div", "relabel-row");
  relabelRow.append(select, relabel);
  box.append(relabelRow);

  if (entry.emergent) {
    const promo = el("div", "promote-form");
    promo.append(el("h4", undefined, "Accept as a new ethic"));
    const idInput = el("input", "promote-id");
    idInput.id = `promote-id-${entry.topic_id}`;
    idInput.placeholder = "id (kebab-case)";
    const labelInput = el("input", "promote-label");
    labelInput.id = `promote-label-${entry.topic_id}`;
    labelInput.placeholder = "label";
    const defInput = el("input", "promote-definition");
    defInput.id = `promote-definition-${entry.topic_id}`;
    defInput.placeholder = "one-line definition";
    const promote = el("button", "promote", "Promote");
    promote.addEventListener("click", () => {
      const id = idInput.value.trim();
      const label = labelInput.value.trim();
      if (!id || !label) {
        validation.textContent = "A promoted ethic needs an id and a label.";
        return;
      }
      onDecide(entry.topic_id, {
        action: "promote_emergent",
        label: { id, label, definition: defInput.value.trim() },
        note: note(),
      });
    });
    allButtons.push(promote);
    promo.append(idInput, labelInput, defInput, promote);
    box.append(promo);
  }

  for (const b of allButtons) b.disabled = busy;
  box.append(noteInput, validation);
  return box;
}

export function alignmentCard(
  entry: AlignmentEntry,
  topic: TopicSummary | undefined,
  samples: ReviewSample[] | undefined,
  alignments: AlignmentState,
  busy: boolean,
  storeValidation: string | null,
  onDecide: Handlers["onDecide"],
): HTMLElement {
  const card = el("section", "alignment-card");
  const header = el("header");
  header.append(el("h2", undefined, `Topic ${entry.topic_id}`));
  header.append(el("span", "badge", badgeFor(entry)));
  if (entry.emergent) header.append(el("span", "emergent-flag", "emergent"));
  card.append(header);

  if (topic) {
    const terms = el("ul", "term-list");
    for (const [word, p] of topic.top_terms) {
      terms.append(el("li", undefined, `${word} ${p.toFixed(4)}`));
    }
    card.append(terms);
    card.append(el("p", "review-count-line", `${topic.review_count} reviews carry this topic.`));
  }

  const best =
    entry.best_principle === null
      ? "No principle reached the assignment threshold."
      : `Best match: ${entry.best_principle} (${entry.best_score.toFixed(3)})`;
  card.append(el("p", "best-line", best));
  if (entry.decided_label) {
    card.append(el("p", "decided-line", `Filed under: ${entry.decided_label}`));
  }

  const scores = el("table", "score-list");
  const shead = el("tr");
  shead.append(el("th", undefined, "principle"), el("th", undefined, "score"));
  const scoresHead = el("thead");
  scoresHead.append(shead);
  scores.append(scoresHead);
  const sbody = el("tbody");
  for (const [pid, score] of sortedScores(entry)) {
    const row = el("tr");
    row.append(el("td", "pid", pid), el("td", "score", score.toFixed(3)));
    sbody.append(row);
  }
  scores.append(sbody);
  card.append(scores);

  card.append(decisionControls(entry, alignments, busy, onDecide));
  if (storeValidation) {
    card.append(el("p", "validation store-validation", storeValidation));
  }
  if (entry.note) card.append(el("p", "note-line", `Note: ${entry.note}`));

  const reviews = el("section", "sample-reviews");
  reviews.append(el("h3", undefined, "Sample reviews"));
  reviews.append(
    el(
      "p",
      "paraphrase-note",
      "Excerpts are verbatim user reviews. Paraphrase them before quoting in any publication.",
    ),
  );
  if (samples === undefined) {
    reviews.append(el("p", "loading-line", "Loading reviews..."));
  } else if (!samples.length) {
    reviews.append(el("p", "no-samples", "No review loads on this topic above the cutoff."));
  } else {
    for (const s of samples) {
      const quote = el("blockquote", "sample");
      quote.append(el("p", undefined, s.text));
      quote.append(el("footer", undefined, `${s.review_id} (theta ${s.theta.toFixed(3)})`));
      reviews.append(quote);
    }
  }
  card.append(reviews);
  return card;
}

export function sparkline(points: [number, number][], bestK: number): SVGSVGElement {
  const W = 220;
  const H = 48;
  const PAD = 4;
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${W} ${H}`);
  svg.setAttribute("class", "sparkline");
  if (points.length < 2) return svg;
  const ks = points.map(([k]) => k);
  const cvs = points.map(([, cv]) => cv);
  const kMin = Math.min(...ks);
  const kMax = Math.max(...ks);
  const cvMin = Math.min(...cvs);
  const cvMax = Math.max(...cvs);
  const x = (k: number) => PAD + ((k - kMin) / Math.max(kMax - kMin, 1e-9)) * (W - 2 * PAD);
  const y = (cv: number) =>
    H - PAD - ((cv - cvMin) / Math.max(cvMax - cvMin, 1e-9)) * (H - 2 * PAD);
  const line = document.createElementNS("http://www.w3.org/2000/svg", "polyline");
  line.setAttribute("points", points.map(([k, cv]) => `${x(k)},${y(cv)}`).join(" "));
  line.setAttribute("fill", "none");
  svg.append(line);
  const best = points.find(([k]) => k === bestK);
  if (best) {
    const dot = document.createElementNS("http://www.w3.org/2000/svg", "circle");
    dot.setAttribute("class", "best-k");
    dot.setAttribute("cx", String(x(best[0])));
    dot.setAttribute("cy", String(y(best[1])));
    dot.setAttribute("r", "3");
    svg.append(dot);
  }
  return svg;
}

export function reportPanel(report: ReportData): HTMLElement {
  const panel = el("section", "report-panel");
  panel.append(el("h2", undefined, "Report"));

  const filt = report.corpus.filter;
  panel.append(
    el("p", "corpus-line", `${filt.input} reviews in, ${filt.kept} kept. Trained with k = ${report.k}.`),
  );

  const curve = el("div", "coherence-curve");
  curve.append(sparkline(report.coherence.points, report.coherence.best_k));
  curve.append(el("span", "curve-caption", `C_v by k (best k = ${report.coherence.best_k})`));
  panel.append(curve);

  if (report.ethics.length) {
    const table = el("table", "ethics-table");
    const head = el("tr");
    for (const col of ["ethic", "source", "frequency", "sentiment", "reviews"]) {
      head.append(el("th", undefined, col));
    }
    const thead = el("thead");
    thead.append(head);
    table.append(thead);
    const body = el("tbody");
    for (const row of report.ethics) {
      const tr = el("tr");
      tr.dataset.ethicId = row.ethic_id;
      const signed = (row.mean_sentiment >= 0 ? "+" : "") + row.mean_sentiment.toFixed(2);
      tr.append(
        el("td", "label", row.label),
        el("td", "source", row.source),
        el("td", "frequency", `${row.frequency_pct.toFixed(1)}%`),
        el("td", "sentiment", signed),
        el("td", "n-reviews", String(row.n_reviews)),
      );
      body.append(tr);
    }
    table.append(body);
    panel.append(table);
  } else {
    panel.append(el("p", "no-ethics", "No topic is mapped to an ethic yet."));
  }

  if (report.pending_topics.length) {
    panel.append(
      el(
        "p",
        "pending-line",
        `Awaiting review: ${report.pending_topics.map((t) => `topic ${t}`).join(", ")}.`,
      ),
    );
  }
  return panel;
}
