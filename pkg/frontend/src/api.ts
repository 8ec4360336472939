/**
 * Typed client for the elicitation service.
 *
 * All numeric payload fields travel as decimal strings and are kept
 * verbatim; nothing here recomputes indicator values. The service is
 * the single source of truth for the gauge.
 */

export interface ComparisonRow {
  i: number; // 1-based row index, i < j
  j: number;
  ratio: string;
}

export interface WorstTriad {
  triad: [number, number, number];
  labels: [string, string, string];
  values: [string, string, string];
}

export interface TriadEntry extends WorstTriad {
  kernel: string;
}

export interface Repair {
  position: [string, string]; // entity labels of the repaired cell
  current: string;
  proposed: string;
}

export interface Report {
  complete: boolean;
  value: string | null;
  worst_triad: WorstTriad | null;
  suggested_repair: Repair | null;
  per_triad: TriadEntry[];
}

export interface SessionState {
  id: string;
  entities: string[];
  indicator: string;
  created: string;
  updated: string;
  comparisons: ComparisonRow[];
  report: Report;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function parseError(resp: Response): Promise<never> {
  let code = "Unknown";
  let detail = `HTTP ${resp.status}`;
  try {
    const doc = await resp.json();
    if (doc && typeof doc.error === "string") code = doc.error;
    if (doc && typeof doc.detail === "string") detail = doc.detail;
  } catch {
    // non-JSON error body; keep defaults
  }
  throw new ApiError(resp.status, code, detail);
}

export class Client {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!resp.ok) await parseError(resp);
    return resp;
  }

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.request(path, init);
    return (await resp.json()) as T;
  }

  async createSession(entities: string[], indicator = "kii"): Promise<string> {
    const doc = await this.json<{ id: string }>("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ entities, indicator }),
    });
    return doc.id;
  }

  fetchSession(id: string): Promise<SessionState> {
    return this.json(`/sessions/${id}`);
  }

  fetchReport(id: string): Promise<Report> {
    return this.json(`/sessions/${id}/report`);
  }

  submitComparison(
    id: string,
    i: string,
    j: string,
    ratio: number | string,
  ): Promise<Report> {
    return this.json(`/sessions/${id}/comparisons`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ i, j, ratio }),
    });
  }

  async exportMatrix(id: string, format: "csv" | "json"): Promise<string> {
    const resp = await this.request(`/sessions/${id}/export?format=${format}`);
    return resp.text();
  }

  async deleteSession(id: string): Promise<void> {
    await this.request(`/sessions/${id}`, { method: "DELETE" });
  }
}
