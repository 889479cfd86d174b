// DOM-free session state machine. Holds the service's session and advice
// payloads verbatim (the single source of truth is the server; the store
// never edits a probability or count, only replaces whole payloads), plus
// rendering state: the probability history for the sparkline and any
// transient error.

import { Advice, ApiClient, ApiError, CreateSessionRequest, SessionState } from "./api.js";

export interface UiSessionView {
  session: SessionState;
  advice: Advice | null;
  // decimal strings as received, one per completed round plus the start
  probHistory: string[];
}

export type StoreListener = (store: SessionStore) => void;

export interface GameSetup {
  deckNotation: string;
  rounds: number;
  mode: "adaptive" | "advance";
  bidNotation?: string;
  standardLabels: boolean;
}

export class SessionStore {
  view: UiSessionView | null = null;
  error: string | null = null;
  busy = false;
  private listeners: StoreListener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(listener: StoreListener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this);
    }
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | null> {
    // failures keep the existing view intact so the player can retry
    this.busy = true;
    this.error = null;
    this.emit();
    try {
      return await work();
    } catch (err) {
      this.error = err instanceof ApiError ? err.message : `service unreachable: ${err}`;
      return null;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async start(setup: GameSetup): Promise<void> {
    await this.guard(async () => {
      const request: CreateSessionRequest = {
        deck: setup.deckNotation,
        rounds: setup.rounds,
        mode: setup.mode,
      };
      if (setup.mode === "advance" && setup.bidNotation) {
        request.bid = setup.bidNotation;
      }
      if (setup.standardLabels) {
        request.standard_labels = true;
      }
      const session = await this.api.createSession(request);
      const advice = await this.api.getAdvice(session.id);
      this.view = {
        session,
        advice,
        probHistory: [session.win_prob.decimal],
      };
    });
  }

  async recordDraw(bid: string, drawn: string): Promise<void> {
    const view = this.view;
    if (!view) {
      throw new Error("no active session");
    }
    await this.guard(async () => {
      const session = await this.api.postDraw(
        view.session.id,
        bid,
        drawn,
        view.session.version,
      );
      const advice = session.status === "in-play"
        ? await this.api.getAdvice(session.id)
        : null;
      this.view = {
        session,
        advice,
        probHistory: [...view.probHistory, session.win_prob.decimal],
      };
    });
  }

  async refresh(): Promise<void> {
    const view = this.view;
    if (!view) {
      return;
    }
    await this.guard(async () => {
      const session = await this.api.getSession(view.session.id);
      const advice = session.status === "in-play"
        ? await this.api.getAdvice(session.id)
        : null;
      this.view = { session, advice, probHistory: view.probHistory };
    });
  }

  async discard(): Promise<void> {
    const view = this.view;
    if (view) {
      try {
        await this.api.deleteSession(view.session.id);
      } catch {
        // dropping a dead session is best-effort
      }
    }
    this.view = null;
    this.error = null;
    this.emit();
  }
}
