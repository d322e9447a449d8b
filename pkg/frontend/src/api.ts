/** Thin fetch client for the engine's stateless HTTP API. */

import type {
  CertifyResponse,
  EvaluateResponse,
  ExampleEntry,
  GameDocument,
  HealthResponse,
  NotionTag,
  PartitionDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function decode<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const detail =
      body && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : response.statusText;
    throw new ApiError(detail, response.status);
  }
  return body as T;
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/+$/, "") + path;
  }

  private async post<T>(path: string, payload: unknown, signal?: AbortSignal): Promise<T> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
      signal: signal ?? null,
    });
    return decode<T>(response);
  }

  async health(): Promise<HealthResponse> {
    return decode(await fetch(this.url("/api/health")));
  }

  async examples(): Promise<ExampleEntry[]> {
    const body = await decode<{ examples: ExampleEntry[] }>(
      await fetch(this.url("/api/examples")),
    );
    return body.examples;
  }

  certify(
    game: GameDocument,
    partition: PartitionDocument,
    notions?: NotionTag[],
    signal?: AbortSignal,
  ): Promise<CertifyResponse> {
    const payload: Record<string, unknown> = { game, partition };
    if (notions) payload.notions = notions;
    return this.post("/api/certify", payload, signal);
  }

  evaluate(
    game: GameDocument,
    partition: PartitionDocument,
    signal?: AbortSignal,
  ): Promise<EvaluateResponse> {
    return this.post("/api/evaluate", { game, partition }, signal);
  }

  blocking(
    game: GameDocument,
    partition: PartitionDocument,
  ): Promise<{ blocking_coalition: string[] | null }> {
    return this.post("/api/blocking", { game, partition });
  }
}
