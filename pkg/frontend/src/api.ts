// Thin typed client over the session service; the fetch function is
// injectable so tests can replay recorded responses.

import { SessionModel, StateModel, StepResponse } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }

  /** The classification the service blamed for a rejected step, if any. */
  classification(): string | null {
    const d = this.detail as { classification?: string } | null;
    return d && typeof d === "object" && d.classification ? d.classification : null;
  }

  reason(): string {
    const d = this.detail as { reason?: string } | null;
    if (d && typeof d === "object" && d.reason) return d.reason;
    return this.message;
  }
}

async function parseDetail(response: Response): Promise<unknown> {
  try {
    const body = await response.json();
    return body && typeof body === "object" && "detail" in body
      ? (body as { detail: unknown }).detail
      : body;
  } catch {
    return response.statusText;
  }
}

export class Client {
  base: string;
  fetchFn: FetchLike;

  constructor(base: string, fetchFn?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  createSession(document: string): Promise<SessionModel> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ document }),
    });
  }

  getSession(id: string): Promise<SessionModel> {
    return this.request(`/sessions/${id}`);
  }

  applyStep(
    id: string,
    vertex: string,
    side: "left" | "right",
    allowNonstrict = false,
  ): Promise<StepResponse> {
    return this.request(`/sessions/${id}/steps`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex, side, allow_nonstrict: allowNonstrict }),
    });
  }

  undo(id: string): Promise<SessionModel> {
    return this.request(`/sessions/${id}/undo`, { method: "POST" });
  }

  exportJson(id: string): Promise<StateModel> {
    return this.request(`/sessions/${id}/export?format=json`);
  }

  async exportText(id: string, format: "qp" | "dot"): Promise<string> {
    const response = await this.fetchFn(
      `${this.base}/sessions/${id}/export?format=${format}`,
    );
    if (!response.ok) throw new ApiError(response.status, await parseDetail(response));
    return response.text();
  }

  listExamples(): Promise<{ examples: string[] }> {
    return this.request("/examples");
  }

  async getExample(name: string): Promise<string> {
    const response = await this.fetchFn(`${this.base}/examples/${name}`);
    if (!response.ok) throw new ApiError(response.status, await parseDetail(response));
    return response.text();
  }
}
