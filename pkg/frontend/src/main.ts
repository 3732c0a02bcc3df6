// DOM wiring: one Actions instance, one render target, event delegation.
// At most one request is in flight per session; clicks during a request are
// dropped rather than queued.

import { Api } from "./api.js";
import { Actions } from "./state.js";
import { render } from "./render.js";

const api = new Api(window.location.origin);
const actions = new Actions(api);
const root = document.getElementById("app") as HTMLElement;
const form = document.getElementById("open-form") as HTMLFormElement;
const typeInput = document.getElementById("type-input") as HTMLInputElement;
const chainInput = document.getElementById("chain-input") as HTMLInputElement;
const undoButton = document.getElementById("undo-button") as HTMLButtonElement;
const pinButton = document.getElementById("pin-button") as HTMLButtonElement;

let busy = false;

function paint(): void {
  root.innerHTML = render(actions.view);
}

async function act(work: () => Promise<unknown>): Promise<void> {
  if (busy) return;
  busy = true;
  try {
    await work();
  } finally {
    busy = false;
    paint();
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  void act(() =>
    actions.open({
      type: typeInput.value.trim() || "A3",
      chain: chainInput.value.trim() || "0:LL",
    }),
  );
});

undoButton.addEventListener("click", () => void act(() => actions.clickUndo()));
pinButton.addEventListener("click", () => void act(() => actions.snapshotForComparison()));

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const vertex = target.closest<SVGGElement & HTMLElement>("g.vertex");
  if (vertex?.dataset.index) {
    void act(() => actions.clickVertex(Number(vertex.dataset.index)));
    return;
  }
  const move = target.closest<HTMLButtonElement>("button.move");
  if (move?.dataset.s) {
    void act(() => actions.clickBox(Number(move.dataset.s)));
  }
});

paint();
