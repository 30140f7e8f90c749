import { afterEach, describe, expect, it, vi } from "vitest";
import { ApiClient, ApiError, ConnectionError } from "../src/api";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("parses a JSON payload and hits the right path", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse([{ topic_id: 0 }]));
    vi.stubGlobal("fetch", fetchMock);
    const client = new ApiClient("http://x");
    const topics = await client.topics();
    expect(topics).toEqual([{ topic_id: 0 }]);
    expect(fetchMock).toHaveBeenCalledWith("http://x/api/topics", undefined);
  });

  it("turns a structured error body into an ApiError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(jsonResponse({ error: "unknown_topic", message: "no topic 99" }, 404)),
    );
    const client = new ApiClient();
    const err = await client.reviews(99).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("unknown_topic");
    expect(err.status).toBe(404);
    expect(err.message).toBe("no topic 99");
  });

  it("keeps the status line when the error body is not JSON", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(new Response("<html>boom</html>", { status: 502, statusText: "Bad Gateway" })),
    );
    const err = await new ApiClient().report().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("http_error");
    expect(err.status).toBe(502);
  });

  it("maps a network failure to ConnectionError", async () => {
    vi.stubGlobal("fetch", vi.fn().mockRejectedValue(new TypeError("fetch failed")));
    const err = await new ApiClient().alignments().catch((e) => e);
    expect(err).toBeInstanceOf(ConnectionError);
  });

  it("POSTs a decision as JSON", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ alignments: [], mapping: {}, pending: [], overlay: [] }));
    vi.stubGlobal("fetch", fetchMock);
    await new ApiClient().decide(3, { action: "reject", note: "off topic" });
    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe("/api/alignments/3/decision");
    expect(init.method).toBe("POST");
    expect(init.headers["Content-Type"]).toBe("application/json");
    expect(JSON.parse(init.body)).toEqual({ action: "reject", note: "off topic" });
  });

  it("passes the review limit through as a query parameter", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse([]));
    vi.stubGlobal("fetch", fetchMock);
    await new ApiClient().reviews(2, 5);
    expect(fetchMock.mock.calls[0][0]).toBe("/api/topics/2/reviews?limit=5");
  });
});
