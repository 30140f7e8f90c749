import { ApiClient, ApiError, ConnectionError } from "./api";
import type {
  AlignmentState,
  DecisionBody,
  ReportData,
  ReviewSample,
  TopicSummary,
} from "./types";

export const PAGE_SIZE = 10;

export interface AppState {
  topics: TopicSummary[] | null;
  alignments: AlignmentState | null;
  report: ReportData | null;
  samples: Record<number, ReviewSample[]>;
  selected: number | null;
  page: number;
  loading: boolean;
  busy: boolean;
  connectionLost: boolean;
  toast: string | null;
  validation: string | null;
}

const INITIAL: AppState = {
  topics: null,
  alignments: null,
  report: null,
  samples: {},
  selected: null,
  page: 0,
  loading: false,
  busy: false,
  connectionLost: false,
  toast: null,
  validation: null,
};

type Listener = (state: AppState) => void;

/** Reason a decision never reached the server. */
export function validateDecision(body: DecisionBody): string | null {
  if (body.action === "relabel" && (typeof body.label !== "string" || !body.label)) {
    return "Pick a principle to relabel to first.";
  }
  if (body.action === "promote_emergent") {
    const label = body.label;
    if (typeof label === "string") {
      return label ? null : "A promoted ethic needs a label.";
    }
    if (!label || !label.id || !label.label) {
      return "A promoted ethic needs an id and a label.";
    }
  }
  return null;
}

export class Store {
  state: AppState = { ...INITIAL };
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private set(patch: Partial<AppState>): void {
    this.state = { ...this.state, ...patch };
    for (const fn of this.listeners) fn(this.state);
  }

  /** Load (or reload) everything the page shows. Stale data survives a failure. */
  async refresh(): Promise<void> {
    this.set({ loading: this.state.topics === null, toast: null });
    try {
      const [topics, alignments, report] = await Promise.all([
        this.api.topics(),
        this.api.alignments(),
        this.api.report(),
      ]);
      this.set({ topics, alignments, report, loading: false, connectionLost: false });
    } catch {
      this.set({ loading: false, connectionLost: true });
    }
  }

  async open(topicId: number | null): Promise<void> {
    this.set({ selected: topicId, validation: null });
    if (topicId === null || this.state.samples[topicId]) return;
    try {
      const reviews = await this.api.reviews(topicId);
      this.set({ samples: { ...this.state.samples, [topicId]: reviews } });
    } catch (err) {
      if (err instanceof ConnectionError) this.set({ connectionLost: true });
      else this.set({ toast: (err as Error).message });
    }
  }

  setPage(page: number): void {
    const n = this.state.topics ? this.state.topics.length : 0;
    const last = Math.max(0, Math.ceil(n / PAGE_SIZE) - 1);
    this.set({ page: Math.min(Math.max(0, page), last) });
  }

  dismissToast(): void {
    this.set({ toast: null });
  }

  /**
   * Submit a decision. Nothing on screen changes until the server has both
   * accepted the decision and served back the fresh alignment and report
   * state, so what the page shows is always a state the server also holds.
   */
  async decide(topicId: number, body: DecisionBody): Promise<boolean> {
    const problem = validateDecision(body);
    if (problem) {
      this.set({ validation: problem });
      return false;
    }
    this.set({ busy: true, validation: null, toast: null });
    try {
      await this.api.decide(topicId, body);
    } catch (err) {
      if (err instanceof ConnectionError) {
        this.set({ busy: false, connectionLost: true });
      } else if (err instanceof ApiError) {
        this.set({ busy: false, toast: `${err.code}: ${err.message}` });
      } else {
        this.set({ busy: false, toast: (err as Error).message });
      }
      return false;
    }
    try {
      const [alignments, report] = await Promise.all([this.api.alignments(), this.api.report()]);
      this.set({ alignments, report, busy: false, connectionLost: false });
      return true;
    } catch {
      // the decision landed but the confirming read did not; keep the old
      // view and let the retry banner trigger a full reload
      this.set({ busy: false, connectionLost: true });
      return false;
    }
  }
}
