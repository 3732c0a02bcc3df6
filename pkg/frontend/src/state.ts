// View state and the action layer.  Every action talks to the service and
// then re-reads state; nothing is computed locally, so the view is always a
// function of the last server response.

import { Api, ServiceError } from "./api.js";
import type { Move, QuiverJson, SessionConfig, SessionState } from "./types.js";

export type ViewState = {
  session: SessionState | null;
  quiver: QuiverJson | null;
  selected: number | null;
  notice: string | null;
  compare: SessionState | null; // side-by-side snapshot of another chain
};

export function initialView(): ViewState {
  return { session: null, quiver: null, selected: null, notice: null, compare: null };
}

export function movableAt(state: SessionState, s: number): Move | undefined {
  return state.movable.find((m) => m.s === s);
}

export class Actions {
  api: Api;
  view: ViewState;

  constructor(api: Api, view: ViewState = initialView()) {
    this.api = api;
    this.view = view;
  }

  private async refresh(state: SessionState): Promise<ViewState> {
    this.view = {
      ...this.view,
      session: state,
      quiver: await this.api.quiver(state.id),
      notice: null,
    };
    return this.view;
  }

  private async guarded(work: () => Promise<SessionState>): Promise<ViewState> {
    if (!this.view.session) {
      this.view = { ...this.view, notice: "no open session" };
      return this.view;
    }
    try {
      return await this.refresh(await work());
    } catch (err) {
      // surface the reason non-destructively; the last good state stays up
      const notice =
        err instanceof ServiceError ? err.detail : `network failure: ${err}`;
      this.view = { ...this.view, notice };
      return this.view;
    }
  }

  async open(config: SessionConfig): Promise<ViewState> {
    try {
      return await this.refresh(await this.api.createSession(config));
    } catch (err) {
      const notice =
        err instanceof ServiceError ? err.detail : `network failure: ${err}`;
      this.view = { ...this.view, notice };
      return this.view;
    }
  }

  clickVertex(k: number): Promise<ViewState> {
    this.view = { ...this.view, selected: k };
    return this.guarded(() => this.api.mutate(this.view.session!.id, k));
  }

  clickBox(s: number): Promise<ViewState> {
    return this.guarded(() => this.api.boxmove(this.view.session!.id, s));
  }

  clickUndo(): Promise<ViewState> {
    return this.guarded(() => this.api.undo(this.view.session!.id));
  }

  async snapshotForComparison(): Promise<ViewState> {
    if (this.view.session) {
      this.view = { ...this.view, compare: this.view.session };
    }
    return this.view;
  }
}
