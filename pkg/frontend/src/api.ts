// Typed client for the advisor service. Probabilities arrive as exact
// fraction strings plus a truncated decimal; the UI never does arithmetic
// on them.

export interface ProbPayload {
  num: string;
  den: string;
  decimal: string;
}

export interface DrawRecord {
  bid: string;
  drawn: string;
  survived: boolean;
}

export interface SessionState {
  id: string;
  mode: "adaptive" | "advance";
  status: "in-play" | "won" | "lost";
  version: number;
  rounds_left: number;
  labels: string[];
  counts: Record<string, number>;
  initial: { counts: Record<string, number>; rounds: number };
  history: DrawRecord[];
  win_prob: ProbPayload;
  decided: boolean | null;
  bid_remaining?: Record<string, number>;
}

export interface WhatIfEntry {
  label: string;
  prob: ProbPayload;
}

export interface AdaptiveAdvice {
  mode: "adaptive";
  optimal: string[];
  win_prob: ProbPayload;
  what_if: WhatIfEntry[];
  warning?: string;
}

export interface AdvanceAdvice {
  mode: "advance";
  next_bid: string;
  bid_remaining: Record<string, number>;
  win_prob: ProbPayload;
}

export type Advice = AdaptiveAdvice | AdvanceAdvice;

export interface CreateSessionRequest {
  deck: string | { counts: number[]; labels?: string[] };
  rounds: number;
  mode?: "adaptive" | "advance";
  bid?: string | number[];
  standard_labels?: boolean;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 204) {
      return undefined as T;
    }
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload.error ?? `HTTP ${response.status}`);
    }
    return payload as T;
  }

  createSession(request: CreateSessionRequest): Promise<SessionState> {
    return this.request<SessionState>("POST", "/sessions", request);
  }

  getSession(id: string): Promise<SessionState> {
    return this.request<SessionState>("GET", `/sessions/${id}`);
  }

  getAdvice(id: string): Promise<Advice> {
    return this.request<Advice>("GET", `/sessions/${id}/advice`);
  }

  postDraw(id: string, bid: string, drawn: string, version?: number): Promise<SessionState> {
    return this.request<SessionState>("POST", `/sessions/${id}/draws`, {
      bid,
      drawn,
      ...(version === undefined ? {} : { version }),
    });
  }

  deleteSession(id: string): Promise<void> {
    return this.request<void>("DELETE", `/sessions/${id}`);
  }
}
