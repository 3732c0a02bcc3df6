// Thin typed client over the session endpoints.  Non-2xx responses raise
// ServiceError carrying the service's own reason string.

import type {
  ApiError,
  QuiverJson,
  SessionConfig,
  SessionState,
  VariablesEntry,
} from "./types.js";

export class ServiceError extends Error {
  status: number;
  detail: string;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
    this.detail = detail;
  }
}

async function request<T>(url: string, method: string, body?: unknown): Promise<T> {
  const response = await fetch(url, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const text = await response.text();
  if (!response.ok) {
    let detail = text;
    try {
      detail = (JSON.parse(text) as ApiError).detail;
    } catch {
      // non-JSON error body: show it as-is
    }
    throw new ServiceError(response.status, detail);
  }
  return JSON.parse(text) as T;
}

export class Api {
  base: string;

  constructor(base: string) {
    this.base = base.replace(/\/$/, "");
  }

  createSession(config: SessionConfig): Promise<SessionState> {
    return request(`${this.base}/session`, "POST", config);
  }

  getState(id: string): Promise<SessionState> {
    return request(`${this.base}/session/${id}`, "GET");
  }

  mutate(id: string, k: number): Promise<SessionState> {
    return request(`${this.base}/session/${id}/mutate`, "POST", { k });
  }

  boxmove(id: string, s: number): Promise<SessionState> {
    return request(`${this.base}/session/${id}/boxmove`, "POST", { s });
  }

  undo(id: string): Promise<SessionState> {
    return request(`${this.base}/session/${id}/undo`, "POST");
  }

  quiver(id: string): Promise<QuiverJson> {
    return request(`${this.base}/session/${id}/quiver`, "GET");
  }

  variables(id: string): Promise<VariablesEntry[]> {
    return request(`${this.base}/session/${id}/variables`, "GET");
  }
}
