import { ApiClient } from "./api";
import { Store } from "./store";
import type { AppState } from "./store";
import type { DecisionBody } from "./types";
import {
  alignmentCard,
  connectionBanner,
  emptyState,
  pendingQueue,
  reportPanel,
  toastView,
  topicTable,
} from "./views";
import "./styles.css";

const store = new Store(new ApiClient(""));
const root = document.getElementById("app")!;

function topicFromHash(): number | null {
  const m = /^#\/topic\/(\d+)$/.exec(location.hash);
  return m ? Number(m[1]) : null;
}

function openTopic(topicId: number | null): void {
  // the hash is the one source of routing truth; hashchange drives the store
  const target = topicId === null ? "#/" : `#/topic/${topicId}`;
  if (location.hash === target) void store.open(topicId);
  else location.hash = target;
}

function decide(topicId: number, body: DecisionBody): void {
  void store.decide(topicId, body);
}

// Re-rendering replaces the whole tree, so carry form values and focus over.
function snapshotInputs(): { values: Map<string, string>; focused: string | null } {
  const values = new Map<string, string>();
  for (const node of root.querySelectorAll<HTMLInputElement | HTMLSelectElement>("input[id], select[id]")) {
    values.set(node.id, node.value);
  }
  const active = document.activeElement;
  const focused = active instanceof HTMLElement && active.id ? active.id : null;
  return { values, focused };
}

function restoreInputs(snap: { values: Map<string, string>; focused: string | null }): void {
  for (const [id, value] of snap.values) {
    const node = document.getElementById(id);
    if (node instanceof HTMLInputElement || node instanceof HTMLSelectElement) {
      node.value = value;
    }
  }
  if (snap.focused) document.getElementById(snap.focused)?.focus();
}

function render(state: AppState): void {
  const snap = snapshotInputs();
  root.replaceChildren();

  const header = document.createElement("header");
  header.className = "page-header";
  const h1 = document.createElement("h1");
  h1.textContent = "Review alignment console";
  header.append(h1);
  root.append(header);

  if (state.connectionLost) {
    root.append(connectionBanner(() => void store.refresh()));
  }
  if (state.toast) {
    root.append(toastView(state.toast, () => store.dismissToast()));
  }

  if (state.topics === null) {
    const note = document.createElement("p");
    note.className = "boot-line";
    note.textContent = state.connectionLost
      ? "Nothing loaded yet. Start the audit server, then retry."
      : "Loading run data...";
    root.append(note);
    return;
  }

  if (!state.topics.length) {
    root.append(emptyState());
    return;
  }

  const layout = document.createElement("div");
  layout.className = "layout";

  const left = document.createElement("div");
  left.className = "column";
  if (state.alignments) {
    left.append(pendingQueue(state.alignments.pending, (tid) => openTopic(tid)));
  }
  left.append(
    topicTable(state.topics, state.alignments, state.page, state.selected, {
      onOpen: (tid) => openTopic(tid),
      onPage: (p) => store.setPage(p),
    }),
  );
  layout.append(left);

  const middle = document.createElement("div");
  middle.className = "column";
  const entry =
    state.selected === null
      ? undefined
      : state.alignments?.alignments.find((a) => a.topic_id === state.selected);
  if (entry && state.alignments) {
    const topic = state.topics.find((t) => t.topic_id === entry.topic_id);
    middle.append(
      alignmentCard(
        entry,
        topic,
        state.samples[entry.topic_id],
        state.alignments,
        state.busy,
        state.validation,
        decide,
      ),
    );
  } else {
    const hint = document.createElement("p");
    hint.className = "select-hint";
    hint.textContent = "Select a topic to inspect its alignment.";
    middle.append(hint);
  }
  layout.append(middle);

  const right = document.createElement("div");
  right.className = "column";
  if (state.report) right.append(reportPanel(state.report));
  layout.append(right);

  root.append(layout);
  restoreInputs(snap);
}

store.subscribe(render);
window.addEventListener("hashchange", () => void store.open(topicFromHash()));

render(store.state);
void store.refresh().then(() => {
  const initial = topicFromHash();
  if (initial !== null) void store.open(initial);
});
