import type {
  AlignmentState,
  CoherenceCurve,
  DecisionBody,
  ReportData,
  ReviewSample,
  TopicSummary,
} from "./types";

/** Error the server reported with a structured {error, message} body. */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

/** The server could not be reached at all (network failure). */
export class ConnectionError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ConnectionError";
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let res: Response;
  try {
    res = await fetch(url, init);
  } catch (err) {
    throw new ConnectionError(err instanceof Error ? err.message : String(err));
  }
  if (!res.ok) {
    let code = "http_error";
    let message = `${res.status} ${res.statusText}`;
    try {
      const body = await res.json();
      if (body && typeof body.error === "string") {
        code = body.error;
        message = typeof body.message === "string" ? body.message : message;
      }
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(code, message, res.status);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  topics(): Promise<TopicSummary[]> {
    return request(`${this.base}/api/topics`);
  }

  alignments(): Promise<AlignmentState> {
    return request(`${this.base}/api/alignments`);
  }

  report(): Promise<ReportData> {
    return request(`${this.base}/api/report`);
  }

  coherence(): Promise<CoherenceCurve> {
    return request(`${this.base}/api/coherence`);
  }

  reviews(topicId: number, limit = 8): Promise<ReviewSample[]> {
    return request(`${this.base}/api/topics/${topicId}/reviews?limit=${limit}`);
  }

  decide(topicId: number, body: DecisionBody): Promise<AlignmentState> {
    return request(`${this.base}/api/alignments/${topicId}/decision`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }
}
