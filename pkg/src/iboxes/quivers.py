"""Quivers on index windows: the block quiver on Z, its (node, level) twin,
the inter-column arrow pattern, and exchange matrices.

Over an ambient admissible sequence, the block quiver (GLS pattern) on Z has

    horizontal arrows  s -> s^-
    vertical arrows    s -> t  iff  s^- < t^- < s < t and the colors are adjacent.

On a (node, level) lattice the same structure reads (HL pattern)

    (i, x) -> (j, y)  iff  d(i,j) = 1 and x = y - 2 d_j + min(d_i, d_j),
                      or   i = j and x = y + 2 d_i,

and the two agree under s -> (i_s, p_s).

Two window conventions coexist.  ``gls_quiver`` computes s^- inside the
window (the seed convention: no arrows between frozen vertices, matching the
initial-seed columns).  ``gls_quiver_ambient`` computes s^- on all of Z and
keeps arrows whose endpoints both lie in the window; it differs from the
former exactly by frozen-frozen arrows (an ambient arrow s -> t absent from
the windowed quiver forces s^- < t^- < window start, freezing both ends) and
is the right object to compare against the lattice quiver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from iboxes.roots import FoldedCartanDatum
from iboxes.qdata import QDatum, hat_points
from iboxes.sequences import AdmissibleSequence


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # ordered pairs of vertices, multiplicities by repetition

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        for a, b in self.arrows:
            if a == b:
                raise ValueError("loops are not allowed")
            if a not in vs or b not in vs:
                raise ValueError("arrow endpoint outside vertex set")

    def arrow_count(self, a, b) -> int:
        return sum(1 for x in self.arrows if x == (a, b))

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) if isinstance(v, tuple) else v for v in self.vertices],
            "arrows": [
                [list(a) if isinstance(a, tuple) else a,
                 list(b) if isinstance(b, tuple) else b]
                for a, b in self.arrows
            ],
        }


@dataclass
class ExchangeMatrix:
    """Sparse integer matrix over rows K and columns Kex, Kex subset of K."""

    rows: tuple
    cols: tuple
    entries: dict = field(default_factory=dict)  # (i, j) -> nonzero int

    def __post_init__(self) -> None:
        rowset = set(self.rows)
        if not set(self.cols) <= rowset:
            raise ValueError("exchangeable indices must be rows")
        self.entries = {k: v for k, v in self.entries.items() if v != 0}
        for (i, j), _ in self.entries.items():
            if i not in rowset or j not in set(self.cols):
                raise ValueError(f"entry {(i, j)} outside K x Kex")
        for i in self.cols:
            for j in self.cols:
                if self.entry(i, j) != -self.entry(j, i):
                    raise ValueError("principal part is not skew-symmetric")

    def entry(self, i, j) -> int:
        return self.entries.get((i, j), 0)

    def column(self, j) -> dict:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def rename(self, mapping: dict) -> "ExchangeMatrix":
        f = lambda x: mapping.get(x, x)
        return ExchangeMatrix(
            tuple(f(i) for i in self.rows),
            tuple(f(j) for j in self.cols),
            {(f(i), f(j)): v for (i, j), v in self.entries.items()},
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExchangeMatrix)
            and set(other.rows) == set(self.rows)
            and set(other.cols) == set(self.cols)
            and other.entries == self.entries
        )

    def to_json(self) -> dict:
        return {
            "rows": [list(r) if isinstance(r, tuple) else r for r in self.rows],
            "cols": [list(c) if isinstance(c, tuple) else c for c in self.cols],
            "triplets": [
                [list(i) if isinstance(i, tuple) else i,
                 list(j) if isinstance(j, tuple) else j, v]
                for (i, j), v in sorted(self.entries.items(), key=repr)
            ],
        }


# ---------------------------------------------------------------------------
# builders


def gls_quiver(seq: AdmissibleSequence, lo: int, hi: int) -> Quiver:
    """The block quiver of the windowed subsequence (seed convention)."""
    window = range(lo, hi + 1)
    colors = {s: seq.i(s) for s in window}

    def local_minus(s: int) -> int | None:
        for t in range(s - 1, lo - 1, -1):
            if colors[t] == colors[s]:
                return t
        return None

    minus = {s: local_minus(s) for s in window}
    arrows = []
    for s in window:
        if minus[s] is not None:
            arrows.append((s, minus[s]))
    for s in window:
        for t in window:
            if t == s or not seq.datum.adjacent(colors[s], colors[t]):
                continue
            sm, tm = minus[s], minus[t]
            # s^- < t^- < s < t with an absent s^- meaning -infinity
            if tm is None:
                continue
            if (sm is None or sm < tm) and tm < s < t:
                arrows.append((s, t))
    return Quiver(tuple(window), tuple(sorted(arrows)))


def gls_quiver_ambient(seq: AdmissibleSequence, lo: int, hi: int) -> Quiver:
    """The block quiver of the full sequence, clipped to the window."""
    window = range(lo, hi + 1)
    arrows = []
    for s in window:
        sm = seq.idx_minus(s)
        if sm >= lo:
            arrows.append((s, sm))
        for t in window:
            if t == s or not seq.datum.adjacent(seq.i(s), seq.i(t)):
                continue
            if sm < seq.idx_minus(t) < s < t:
                arrows.append((s, t))
    return Quiver(tuple(window), tuple(sorted(arrows)))


def hl_quiver(datum: FoldedCartanDatum, vertices) -> Quiver:
    """The (node, level) quiver on an explicit finite vertex set."""
    verts = tuple(sorted((i, p) for (i, p) in vertices))
    vset = set(verts)
    arrows = []
    for (i, x) in verts:
        for (j, y) in verts:
            if i == j and x == y + 2 * datum.d[i]:
                arrows.append(((i, x), (j, y)))
            elif datum.adjacent(i, j) and x == y - 2 * datum.d[j] + min(datum.d[i], datum.d[j]):
                arrows.append(((i, x), (j, y)))
    return Quiver(verts, tuple(sorted(arrows)))


def psi_quiver(q: QDatum, lo: int, hi: int) -> Quiver:
    """The lattice quiver between adjacent columns, on levels in [lo, hi]."""
    datum = q.datum
    verts = tuple((x.node, x.level) for x in hat_points(q, lo, hi))
    vset = set(verts)
    arrows = []
    for (i, p) in verts:
        for j in datum.neighbors(i):
            qlev = p + min(datum.d[i], datum.d[j])
            if (j, qlev) in vset:
                arrows.append(((i, p), (j, qlev)))
    return Quiver(verts, tuple(sorted(arrows)))


def to_exchange_matrix(quiver: Quiver, rows, cols) -> ExchangeMatrix:
    """b_{ij} = #(i -> j) - #(j -> i) over K x Kex."""
    rows, cols = tuple(rows), tuple(cols)
    entries: dict = {}
    for (a, b) in quiver.arrows:
        if b in set(cols) and a in set(rows):
            entries[(a, b)] = entries.get((a, b), 0) + 1
        if a in set(cols) and b in set(rows):
            entries[(b, a)] = entries.get((b, a), 0) - 1
    return ExchangeMatrix(rows, cols, entries)


def gls_exchange_matrix(seq: AdmissibleSequence, lo: int, hi: int) -> ExchangeMatrix:
    """The initial exchange matrix on [lo, hi]: exchangeable iff s^- >= lo."""
    quiver = gls_quiver(seq, lo, hi)
    cols = tuple(s for s in range(lo, hi + 1) if seq.idx_minus(s) >= lo)
    return to_exchange_matrix(quiver, quiver.vertices, cols)


def check_gls_eq_hl(seq: AdmissibleSequence, lo: int, hi: int) -> bool:
    """Arrow-set equality of the two quivers under s -> (i_s, p_s) on a window."""
    gls = gls_quiver_ambient(seq, lo, hi)
    image = {s: seq.pair(s) for s in gls.vertices}
    if len(set(image.values())) != len(gls.vertices):
        return False
    hl = hl_quiver(seq.datum, image.values())
    mapped = sorted((image[a], image[b]) for a, b in gls.arrows)
    return mapped == sorted(hl.arrows)


def export_dot(quiver: Quiver, label=str) -> str:
    """Deterministic DOT rendering; vertices are sorted and named v0, v1, ..."""
    order = sorted(quiver.vertices, key=repr)
    names = {v: f"v{k}" for k, v in enumerate(order)}
    lines = ["digraph {"]
    for v in order:
        text = label(v)
        if text and text != names[v]:
            lines.append(f'  {names[v]} [label="{text}"];')
        else:
            lines.append(f"  {names[v]};")
    for a, b in sorted(quiver.arrows, key=repr):
        lines.append(f"  {names[a]} -> {names[b]};")
    lines.append("}")
    return "\n".join(lines)
