// Typed client for the annotation service's HTTP/JSON API.

export interface PairCard {
  pair_id: string;
  comment: string;
  code_context: string;
  kind: string;
  path: string;
  line_start: number;
  position: number;
  total: number;
}

export interface Progress {
  labeled: number;
  target: number;
}

export type LabelValue = "useful" | "not_useful";

export class ApiError extends Error {
  constructor(public status: number, public code: string) {
    super(`${status}: ${code}`);
  }
}

export class AnnotationApi {
  constructor(private baseUrl: string, private fetchFn: typeof fetch = fetch) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const body = (await resp.json().catch(() => ({}))) as Record<string, unknown>;
    if (!resp.ok) {
      throw new ApiError(resp.status, String(body.error ?? "unknown_error"));
    }
    return body;
  }

  async fetchNext(): Promise<PairCard | null> {
    try {
      const body = (await this.request("/pairs?status=unlabeled&limit=1")) as {
        pairs: PairCard[];
      };
      return body.pairs.length > 0 ? body.pairs[0] : null;
    } catch (err) {
      if (err instanceof ApiError && err.code === "session_complete") {
        return null; // completion is a state, not a failure
      }
      throw err;
    }
  }

  async submitLabel(pairId: string, label: LabelValue, annotator: string): Promise<Progress> {
    const body = (await this.request(`/pairs/${pairId}/label`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ label, annotator }),
    })) as { labeled: number; target: number };
    return { labeled: body.labeled, target: body.target };
  }

  async progress(): Promise<Progress> {
    return (await this.request("/progress")) as Progress;
  }

  async guidelines(): Promise<string> {
    const body = (await this.request("/guidelines")) as { guidelines: string };
    return body.guidelines;
  }

  async exportLabeled(): Promise<Array<{ id: string; label: number }>> {
    const body = (await this.request("/export")) as {
      pairs: Array<{ id: string; label: number }>;
    };
    return body.pairs;
  }
}
