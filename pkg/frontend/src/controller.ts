// Session state machine, independent of the DOM so it can be tested
// headlessly. One request is in flight at a time; a submission only
// advances to the next card after the service acknowledges it.

import { AnnotationApi, ApiError, LabelValue, PairCard, Progress } from "./api.js";

export type Phase = "loading" | "card" | "complete" | "error";

export interface SessionState {
  phase: Phase;
  card: PairCard | null;
  progress: Progress | null;
  busy: boolean; // a request is in flight; input must be ignored
  errorMessage: string | null;
}

export type Listener = (state: SessionState) => void;

export class SessionController {
  private state: SessionState = {
    phase: "loading",
    card: null,
    progress: null,
    busy: false,
    errorMessage: null,
  };
  private listeners: Listener[] = [];

  constructor(private api: AnnotationApi, private annotator: string = "ui") {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  getState(): SessionState {
    return { ...this.state };
  }

  private set(patch: Partial<SessionState>): void {
    this.state = { ...this.state, ...patch };
    for (const l of this.listeners) l(this.getState());
  }

  async start(): Promise<void> {
    this.set({ phase: "loading", busy: true, errorMessage: null });
    try {
      const progress = await this.api.progress();
      this.set({ progress });
      await this.advance();
    } catch (err) {
      this.set({ phase: "error", busy: false, errorMessage: describe(err) });
    }
  }

  /** Fetch the next unlabeled card, or enter the completion state. */
  private async advance(): Promise<void> {
    this.set({ phase: "loading", busy: true });
    const card = await this.api.fetchNext();
    if (card === null) {
      this.set({ phase: "complete", card: null, busy: false });
      return;
    }
    this.set({ phase: "card", card, busy: false });
  }

  /** Submit a decision for the visible card. No card or a request already
   * in flight means the call is ignored, so a key press can never produce
   * more than one POST. */
  async submit(label: LabelValue): Promise<void> {
    if (this.state.busy || this.state.phase !== "card" || !this.state.card) {
      return;
    }
    const pairId = this.state.card.pair_id;
    this.set({ busy: true });
    try {
      const progress = await this.api.submitLabel(pairId, label, this.annotator);
      this.set({ progress });
      await this.advance();
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // already labeled elsewhere (or the session just completed):
        // skip forward without losing anything
        try {
          this.set({ progress: await this.api.progress() });
          await this.advance();
        } catch (inner) {
          this.set({ phase: "error", busy: false, errorMessage: describe(inner) });
        }
        return;
      }
      this.set({ phase: "error", busy: false, errorMessage: describe(err) });
    }
  }

  /** Retry after a network failure, keeping server-side state authoritative. */
  async retry(): Promise<void> {
    if (this.state.busy) return;
    await this.start();
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `service error ${err.status} (${err.code})`;
  if (err instanceof Error) return err.message;
  return String(err);
}
