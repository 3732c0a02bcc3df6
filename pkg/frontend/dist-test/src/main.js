// DOM wiring: one Actions instance, one render target, event delegation.
// At most one request is in flight per session; clicks during a request are
// dropped rather than queued.
import { Api } from "./api.js";
import { Actions } from "./state.js";
import { render } from "./render.js";
const api = new Api(window.location.origin);
const actions = new Actions(api);
const root = document.getElementById("app");
const form = document.getElementById("open-form");
const typeInput = document.getElementById("type-input");
const chainInput = document.getElementById("chain-input");
const undoButton = document.getElementById("undo-button");
const pinButton = document.getElementById("pin-button");
let busy = false;
function paint() {
    root.innerHTML = render(actions.view);
}
async function act(work) {
    if (busy)
        return;
    busy = true;
    try {
        await work();
    }
    finally {
        busy = false;
        paint();
    }
}
form.addEventListener("submit", (event) => {
    event.preventDefault();
    void act(() => actions.open({
        type: typeInput.value.trim() || "A3",
        chain: chainInput.value.trim() || "0:LL",
    }));
});
undoButton.addEventListener("click", () => void act(() => actions.clickUndo()));
pinButton.addEventListener("click", () => void act(() => actions.snapshotForComparison()));
root.addEventListener("click", (event) => {
    const target = event.target;
    const vertex = target.closest("g.vertex");
    if (vertex?.dataset.index) {
        void act(() => actions.clickVertex(Number(vertex.dataset.index)));
        return;
    }
    const move = target.closest("button.move");
    if (move?.dataset.s) {
        void act(() => actions.clickBox(Number(move.dataset.s)));
    }
});
paint();
