// Shapes returned by the audit server's /api endpoints.

export interface TopicSummary {
  topic_id: number;
  top_terms: [string, number][];
  review_count: number;
  coherence: number;
}

export interface AlignmentEntry {
  topic_id: number;
  scores: Record<string, number>;
  best_principle: string | null;
  best_score: number;
  emergent: boolean;
  decision: string;
  decided_label: string | null;
  note: string | null;
}

export interface OverlayPrinciple {
  id: string;
  label: string;
  definition: string;
  source: string;
}

export interface AlignmentState {
  alignments: AlignmentEntry[];
  mapping: Record<string, string>;
  pending: number[];
  overlay: OverlayPrinciple[];
}

export interface EthicsRow {
  ethic_id: string;
  label: string;
  source: string;
  frequency_pct: number;
  mean_sentiment: number;
  n_reviews: number;
}

export interface CoherenceCurve {
  points: [number, number][];
  best_k: number;
}

export interface CorpusStats {
  filter: {
    input: number;
    kept: number;
    rejected: Record<string, number>;
  };
  reviews: Record<string, number>;
}

export interface ReportData {
  corpus: CorpusStats;
  coherence: CoherenceCurve;
  k: number;
  topics: { topic_id: number; top_terms: [string, number][]; review_count: number }[];
  alignments: AlignmentEntry[];
  pending_topics: number[];
  ethics: EthicsRow[];
}

export interface ReviewSample {
  review_id: string;
  text: string;
  theta: number;
}

export type DecisionAction = "accept" | "reject" | "relabel" | "promote_emergent";

export interface PromotionPayload {
  id: string;
  label: string;
  definition: string;
}

export interface DecisionBody {
  action: DecisionAction;
  label?: string | PromotionPayload;
  note?: string;
}
