// Session state container: every displayed state comes from the service
// (no local mutation), the timeline replays through undo.

import { ApiError, Client } from "./api.js";
import { StateModel } from "./types.js";

export interface Toast {
  kind: "error" | "info";
  message: string;
}

export interface AppliedStep {
  vertex: string;
  side: string;
  nonstrict: boolean;
}

export class ExplorerStore {
  client: Client;
  sessionId: string | null = null;
  /** timeline[0] is the loaded document's state; one entry per applied step after it. */
  timeline: StateModel[] = [];
  steps: AppliedStep[] = [];
  cursor = 0;
  toasts: Toast[] = [];

  constructor(client: Client) {
    this.client = client;
  }

  get current(): StateModel | null {
    return this.timeline.length ? this.timeline[this.cursor] : null;
  }

  toast(kind: Toast["kind"], message: string): void {
    this.toasts.push({ kind, message });
  }

  async load(document: string): Promise<StateModel> {
    const session = await this.client.createSession(document);
    this.sessionId = session.id;
    this.timeline = [session.state];
    this.steps = [];
    this.cursor = 0;
    this.toasts = [];
    return session.state;
  }

  /** Plain click requests a left mutation; a modifier requests right. */
  async clickVertex(vertex: string, modifier = false): Promise<StateModel | null> {
    if (!this.sessionId || !this.current) return null;
    if (this.cursor !== this.timeline.length - 1) {
      this.toast("info", "jump to the latest state before mutating");
      return null;
    }
    const side = modifier ? "right" : "left";
    try {
      const response = await this.client.applyStep(this.sessionId, vertex, side);
      this.timeline.push(response.state);
      this.steps.push(response.applied);
      this.cursor = this.timeline.length - 1;
      if (response.warning) this.toast("info", response.warning);
      return response.state;
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        const classification = error.classification();
        this.toast(
          "error",
          classification
            ? `vertex ${vertex}: classified ${classification}`
            : error.reason(),
        );
        return null;
      }
      throw error;
    }
  }

  async undo(): Promise<StateModel | null> {
    if (!this.sessionId || this.timeline.length <= 1) return null;
    const session = await this.client.undo(this.sessionId);
    this.timeline.pop();
    this.steps.pop();
    this.cursor = this.timeline.length - 1;
    // the service is the authority: replace our copy with its state
    this.timeline[this.cursor] = session.state;
    return session.state;
  }

  /** Rewind to a timeline index by replaying undo on the service. */
  async jumpTo(index: number): Promise<StateModel | null> {
    if (!this.sessionId) return null;
    if (index < 0 || index >= this.timeline.length) return null;
    while (this.timeline.length - 1 > index) {
      await this.undo();
    }
    this.cursor = index;
    return this.current;
  }

  async snapshot(): Promise<StateModel | null> {
    if (!this.sessionId) return null;
    return this.client.exportJson(this.sessionId);
  }
}
