/** Thin typed client for the task service HTTP API. */

import type {
  DatasetInfo,
  QueryPayload,
  QuerySet,
  TaskRecord,
  TaskStatus,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly queryErrors?: { local_id: number; error: string }[],
  ) {
    super(message);
  }
}

async function toError(response: Response): Promise<ApiError> {
  let message = `${response.status} ${response.statusText}`;
  let queryErrors;
  try {
    const body = await response.json();
    if (typeof body.error === "string") message = body.error;
    if (Array.isArray(body.errors)) {
      queryErrors = body.errors;
      message = body.errors
        .map((e: { local_id: number; error: string }) => `query ${e.local_id}: ${e.error}`)
        .join("; ");
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(message, response.status, queryErrors);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) throw await toError(response);
    return (await response.json()) as T;
  }

  listDatasets(): Promise<DatasetInfo[]> {
    return this.request("/api/datasets");
  }

  uploadDataset(name: string, format: string, file: File): Promise<DatasetInfo> {
    const form = new FormData();
    form.append("name", name);
    form.append("format", format);
    form.append("file", file);
    return this.request("/api/datasets", { method: "POST", body: form });
  }

  submitQuerySet(queries: QueryPayload[]): Promise<QuerySet> {
    return this.request("/api/querysets", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ queries }),
    });
  }

  getStatus(id: string): Promise<{ id: string; tasks: TaskStatus[] }> {
    return this.request(`/api/querysets/${id}/status`);
  }

  getResults(id: string): Promise<{ id: string; tasks: TaskRecord[] }> {
    return this.request(`/api/querysets/${id}/results`);
  }

  deleteQuery(id: string, localId: number): Promise<QuerySet> {
    return this.request(`/api/querysets/${id}/queries/${localId}`, { method: "DELETE" });
  }

  clearQuerySet(id: string): Promise<QuerySet> {
    return this.request(`/api/querysets/${id}`, { method: "DELETE" });
  }
}

/**
 * Same-origin by default; a `?api=http://host:port` query parameter
 * points a statically hosted dashboard at a remote service.
 */
export function apiBaseFromLocation(search: string): string {
  return new URLSearchParams(search).get("api") ?? "";
}
