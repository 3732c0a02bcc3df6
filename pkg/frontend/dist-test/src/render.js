// Pure HTML/SVG string builders.  Input is the last server state; output is
// markup.  Polynomials and labels are escaped but otherwise inserted
// verbatim, so what is shown is byte-for-byte what the service returned.
export function escapeHtml(text) {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}
export function boxLabel(box) {
    return box[0] === box[1] ? `[${box[0]}]` : `[${box[0]},${box[1]}]`;
}
const COL_STEP = 110;
const ROW_STEP = 44;
const MARGIN = 60;
export function gridLayout(positions) {
    // columns keyed by color, rows by level, mirroring the repetition-quiver
    // pictures: larger levels sit higher
    const colors = [...new Set(positions.map((p) => p.color))].sort((a, b) => a - b);
    const levels = positions.map((p) => p.level);
    const maxLevel = Math.max(...levels);
    const coords = new Map();
    for (const p of positions) {
        coords.set(p.index, {
            x: MARGIN + colors.indexOf(p.color) * COL_STEP,
            y: MARGIN + (maxLevel - p.level) * ROW_STEP,
        });
    }
    return {
        width: MARGIN * 2 + (colors.length - 1) * COL_STEP,
        height: MARGIN * 2 + (maxLevel - Math.min(...levels)) * ROW_STEP,
        coords,
    };
}
export function renderQuiverSvg(state, quiver, selected) {
    const layout = gridLayout(state.positions);
    const parts = [];
    parts.push(`<svg viewBox="0 0 ${layout.width} ${layout.height}" width="${layout.width}" height="${layout.height}">`, `<defs><marker id="tip" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
        `<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>`);
    for (const [from, to] of quiver?.arrows ?? []) {
        const a = layout.coords.get(from);
        const b = layout.coords.get(to);
        if (!a || !b)
            continue;
        const dx = b.x - a.x;
        const dy = b.y - a.y;
        const len = Math.hypot(dx, dy) || 1;
        const trim = 20 / len;
        parts.push(`<line class="arrow" x1="${a.x + dx * trim}" y1="${a.y + dy * trim}" ` +
            `x2="${b.x - dx * trim}" y2="${b.y - dy * trim}" marker-end="url(#tip)"/>`);
    }
    for (const p of state.positions) {
        const at = layout.coords.get(p.index);
        const classes = ["vertex", p.frozen ? "frozen" : "exchangeable"];
        if (selected === p.index)
            classes.push("selected");
        parts.push(`<g class="${classes.join(" ")}" data-index="${p.index}">` +
            (p.frozen
                ? `<rect x="${at.x - 14}" y="${at.y - 14}" width="28" height="28" rx="4"/>`
                : `<circle cx="${at.x}" cy="${at.y}" r="15"/>`) +
            `<text x="${at.x}" y="${at.y + 4}" text-anchor="middle">${p.index}</text>` +
            `<text class="boxtag" x="${at.x}" y="${at.y + 30}" text-anchor="middle">${escapeHtml(boxLabel(p.box))}</text></g>`);
    }
    parts.push("</svg>");
    return parts.join("");
}
export function renderChainStrip(state) {
    const movableKinds = new Map(state.movable.map((m) => [m.s, m.kind]));
    const chips = state.positions
        .map((p) => {
        const kind = movableKinds.get(p.index);
        const cls = kind ? `chip movable ${kind}` : "chip";
        const button = kind
            ? `<button class="move" data-s="${p.index}" title="box move (${kind})">&#8646;</button>`
            : "";
        return `<span class="${cls}">${escapeHtml(boxLabel(p.box))}${button}</span>`;
    })
        .join(" ");
    return (`<div class="chainline"><code>${state.chain.a}:${escapeHtml(state.chain.code) || "&empty;"}</code> ` +
        `range [${state.range[0]}, ${state.range[1]}]</div><div class="chips">${chips}</div>`);
}
export function renderVariables(entries) {
    const rows = entries
        .map((e) => `<tr><td>${e.index}</td><td>${escapeHtml(boxLabel(e.box))}</td>` +
        `<td>${e.kr ? escapeHtml(e.kr) : "<em>mutated</em>"}</td>` +
        `<td><code class="laurent">${escapeHtml(e.laurent)}</code></td></tr>`)
        .join("");
    return (`<table><thead><tr><th>#</th><th>box</th><th>class</th><th>variable</th></tr></thead>` +
        `<tbody>${rows}</tbody></table>`);
}
export function renderHistory(state) {
    if (!state.history.length)
        return "<em>no moves yet</em>";
    return state.history
        .map((op) => op.op === "mutate" ? `<li>mutate at ${op.k}</li>` : `<li>box move at ${op.s}</li>`)
        .join("");
}
export function renderComparison(view) {
    if (!view.compare)
        return "";
    return (`<h3>pinned chain <code>${view.compare.chain.a}:${escapeHtml(view.compare.chain.code)}</code></h3>` +
        renderVariables(view.compare.positions));
}
export function render(view) {
    if (!view.session) {
        return `<p class="notice">${escapeHtml(view.notice ?? "open a session to begin")}</p>`;
    }
    const s = view.session;
    return [
        view.notice ? `<p class="notice">${escapeHtml(view.notice)}</p>` : "",
        `<section id="chain">${renderChainStrip(s)}</section>`,
        `<section id="quiver">${renderQuiverSvg(s, view.quiver, view.selected)}</section>`,
        `<section id="variables">${renderVariables(s.positions)}</section>`,
        `<section id="history"><ol>${renderHistory(s)}</ol></section>`,
        `<section id="compare">${renderComparison(view)}</section>`,
    ].join("\n");
}
