/** Thin client for the explorer service; every state change round-trips it. */

import type { CatalogResponse, ErrorBody, Pair, SessionResponse, StateView } from "./types.js";

/** The service answered with 4xx/5xx and a structured body. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** The service could not be reached at all (retryable). */
export class NetworkError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NetworkError";
  }
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? {} : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new NetworkError(`cannot reach ${this.baseUrl}: ${String(err)}`);
    }
    if (!response.ok) {
      let code = "unknown";
      let message = `${response.status}`;
      try {
        const parsed = (await response.json()) as ErrorBody;
        code = parsed.error;
        message = parsed.message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  createSession(n: number): Promise<SessionResponse> {
    return this.request("POST", "/session", { n });
  }

  flip(sessionId: string, diagonal: Pair): Promise<StateView> {
    return this.request("POST", `/session/${sessionId}/flip`, { diagonal });
  }

  mutate(sessionId: string, vertex: number): Promise<StateView> {
    return this.request("POST", `/session/${sessionId}/mutate`, { vertex });
  }

  rotate(sessionId: string, steps: number): Promise<StateView> {
    return this.request("POST", `/session/${sessionId}/rotate`, { steps });
  }

  undo(sessionId: string): Promise<StateView> {
    return this.request("POST", `/session/${sessionId}/undo`);
  }

  catalog(n: number): Promise<CatalogResponse> {
    return this.request("GET", `/catalog/${n}`);
  }
}
