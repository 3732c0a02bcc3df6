// View state and the action layer.  Every action talks to the service and
// then re-reads state; nothing is computed locally, so the view is always a
// function of the last server response.
import { ServiceError } from "./api.js";
export function initialView() {
    return { session: null, quiver: null, selected: null, notice: null, compare: null };
}
export function movableAt(state, s) {
    return state.movable.find((m) => m.s === s);
}
export class Actions {
    constructor(api, view = initialView()) {
        this.api = api;
        this.view = view;
    }
    async refresh(state) {
        this.view = {
            ...this.view,
            session: state,
            quiver: await this.api.quiver(state.id),
            notice: null,
        };
        return this.view;
    }
    async guarded(work) {
        if (!this.view.session) {
            this.view = { ...this.view, notice: "no open session" };
            return this.view;
        }
        try {
            return await this.refresh(await work());
        }
        catch (err) {
            // surface the reason non-destructively; the last good state stays up
            const notice = err instanceof ServiceError ? err.detail : `network failure: ${err}`;
            this.view = { ...this.view, notice };
            return this.view;
        }
    }
    async open(config) {
        try {
            return await this.refresh(await this.api.createSession(config));
        }
        catch (err) {
            const notice = err instanceof ServiceError ? err.detail : `network failure: ${err}`;
            this.view = { ...this.view, notice };
            return this.view;
        }
    }
    clickVertex(k) {
        this.view = { ...this.view, selected: k };
        return this.guarded(() => this.api.mutate(this.view.session.id, k));
    }
    clickBox(s) {
        return this.guarded(() => this.api.boxmove(this.view.session.id, s));
    }
    clickUndo() {
        return this.guarded(() => this.api.undo(this.view.session.id));
    }
    async snapshotForComparison() {
        if (this.view.session) {
            this.view = { ...this.view, compare: this.view.session };
        }
        return this.view;
    }
}
