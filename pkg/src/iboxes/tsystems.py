"""T-system relations, KR labels, and cluster seeds attached to chains.

The exchange identity of an i-box [a, b] with a < b reads

    [M[a+, b]] [M[a, b-]] = [M[a, b]] [M[a+, b-]]
                            + prod over colors j adjacent to i_a of [M[a(j)+, b(j)-]]

where M[x, y] with x > y is the unit and contributes no factor.  The initial
seed of a window [a, b] puts a fresh variable on every box [s, b} of the
all-L chain, with the windowed block quiver as exchange matrix; the seed of
any other chain with the same range is defined by transporting that seed
along a box-move path, mutating at T-system moves and doing nothing at
transpositions (boxes, not positions, key the variables).  This makes the
exchange matrix of an arbitrary chain an algorithmic object; the verifier
below checks move by move that the transported matrix reproduces exactly the
T-system exchange.
"""

from __future__ import annotations

from dataclasses import dataclass

from iboxes.chains import (
    Chain,
    IBox,
    box_move,
    canonical_chain,
    classify_move,
    color_multiplicity,
    effective_left,
    frozen_indices,
    member_index,
    movable,
    t_path,
)
from iboxes.cluster import Seed, initial_seed, mutate_seed
from iboxes.laurent import Laurent
from iboxes.qdata import spectral_constant
from iboxes.quivers import ExchangeMatrix, gls_exchange_matrix
from iboxes.sequences import AdmissibleSequence


# ---------------------------------------------------------------------------
# relations and labels


@dataclass(frozen=True)
class Relation:
    """lhs[0] * lhs[1] = prod(rhs_main) + prod(rhs_adjacent), units dropped."""

    lhs: tuple[IBox, IBox]
    rhs_main: tuple[IBox, ...]
    rhs_adjacent: tuple[IBox, ...]

    @staticmethod
    def _product(boxes: tuple[IBox, ...]) -> str:
        return "".join(f"[M{box}]" for box in boxes) or "1"

    def __str__(self) -> str:
        return (
            f"{self._product(self.lhs)} = {self._product(self.rhs_main)}"
            f" + {self._product(self.rhs_adjacent)}"
        )


def t_relation(seq: AdmissibleSequence, box: IBox) -> Relation:
    """The exchange identity of an i-box with more than one color position."""
    a, b = box.a, box.b
    if seq.i(a) != seq.i(b):
        raise ValueError(f"[{a},{b}] is not an i-box")
    if a == b:
        raise ValueError("degenerate box")
    color = seq.i(a)
    ap, bm = seq.idx_plus(a), seq.idx_minus(b)
    lhs = (IBox(ap, b), IBox(a, bm))
    rhs_main = [box] + ([IBox(ap, bm)] if ap <= bm else [])
    rhs_adj = []
    for j in sorted(seq.datum.neighbors(color)):
        lo = seq.idx_color_plus(a, j)
        hi = seq.idx_color_minus(b, j)
        if lo <= hi:
            rhs_adj.append(IBox(lo, hi))
    return Relation(lhs, tuple(rhs_main), tuple(rhs_adj))


@dataclass(frozen=True)
class KRLabel:
    """W^(node)_{m, c q^p}: node in the orbit index set, tensor length m."""

    node: int
    m: int
    exponent: int
    twist_tag: str  # spectral prefix + base, e.g. "(-q)" or "-(q^(1/2))"

    def __str__(self) -> str:
        return f"W^({self.node})_{{{self.m},{self.twist_tag}^{self.exponent}}}"


def kr_label(seq: AdmissibleSequence, box: IBox) -> KRLabel:
    """The KR class of a box: orbit node, color multiplicity, lowest level."""
    datum = seq.datum
    color = seq.i(box.a)
    if seq.i(box.b) != color:
        raise ValueError(f"{box} is not an i-box")
    m = color_multiplicity(seq, box)
    # the top factor sits 2 d (m-1) levels above the bottom one
    assert seq.p(box.b) == seq.p(box.a) + 2 * datum.d[color] * (m - 1)
    prefix, base = spectral_constant(datum, color, seq.p(box.a))
    return KRLabel(datum.pi[color], m, seq.p(box.a), prefix + base)


def cuspidal_positions(seq: AdmissibleSequence, box: IBox) -> tuple[int, ...]:
    """The factor positions of a box: indices in [a, b] carrying the endpoint color."""
    color = seq.i(box.a)
    return tuple(t for t in range(box.a, box.b + 1) if seq.i(t) == color)


# ---------------------------------------------------------------------------
# seeds from chains


@dataclass
class BoxSeed:
    """A cluster seed whose keys are the i-boxes of a chain."""

    seq: AdmissibleSequence
    chain: Chain
    seed: Seed  # keyed by IBox
    initial_boxes: tuple[IBox, ...]  # Laurent variable order

    @property
    def boxes(self) -> tuple[IBox, ...]:
        return self.chain.boxes

    @property
    def frozen_boxes(self) -> frozenset[IBox]:
        return frozenset(self.chain.box(k) for k in frozen_indices(self.chain))

    def variable(self, box: IBox) -> Laurent:
        return self.seed.variables[box]

    def variable_names(self) -> list[str]:
        return [f"x{box}" for box in self.initial_boxes]

    def format_variable(self, box: IBox) -> str:
        return self.variable(box).format(self.variable_names())

    def labels(self) -> dict[IBox, KRLabel]:
        return {box: kr_label(self.seq, box) for box in self.boxes}

    def to_json(self) -> dict:
        names = {box: f"x{box}" for box in self.seed.keys}
        payload = self.seed.to_json(names)
        payload["chain"] = self.chain.to_json()
        payload["boxes"] = [[box.a, box.b] for box in self.boxes]
        payload["frozen"] = sorted([box.a, box.b] for box in self.frozen_boxes)
        payload["kr"] = {f"x{box}": str(label) for box, label in self.labels().items()}
        return payload


def canonical_box_seed(seq: AdmissibleSequence, a: int, b: int) -> BoxSeed:
    """Fresh variables on the all-L chain's boxes, block-quiver exchange matrix."""
    chain = canonical_chain(seq, a, b)
    bmat = gls_exchange_matrix(seq, a, b)
    box_of = {s: effective_left(seq, s, b) for s in range(a, b + 1)}
    renamed = bmat.rename(box_of)
    boxes_in_order = tuple(box_of[s] for s in range(a, b + 1))
    bmat_ordered = ExchangeMatrix(boxes_in_order, renamed.cols, renamed.entries)
    return BoxSeed(seq, chain, initial_seed(bmat_ordered), boxes_in_order)


def transport(box_seed: BoxSeed, moves: list[int]) -> BoxSeed:
    """Carry a seed along box moves: mutate at T-system moves, relabel at none."""
    chain, seed = box_seed.chain, box_seed.seed
    for s in moves:
        move = classify_move(chain, s)
        if move.is_tsystem:
            old = chain.box(s)
            chain = box_move(chain, s)
            new = chain.box(s)
            seed = mutate_seed(seed, old).rename({old: new})
        else:
            chain = box_move(chain, s)
    return BoxSeed(box_seed.seq, chain, seed, box_seed.initial_boxes)


def seed_from_chain(seq: AdmissibleSequence, chain: Chain) -> BoxSeed:
    """The seed of an arbitrary finite chain, by transport from the all-L seed."""
    lo, hi = chain.range
    base = canonical_box_seed(seq, lo, hi)
    return transport(base, t_path(base.chain, chain))


# ---------------------------------------------------------------------------
# verification operations


@dataclass
class MoveReport:
    ok: bool
    kind: str
    lines: list[str]

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return "\n".join([f"{status} ({self.kind})"] + [f"  {l}" for l in self.lines])


def verify_box_move_mutation(
    seq: AdmissibleSequence, chain: Chain, s: int, box_seed: BoxSeed | None = None
) -> MoveReport:
    """Check that the box move at s is literally the T-system exchange.

    For a T-system move the transported matrix column at the moved box must
    reproduce the relation's two products, and the mutated variable must equal
    the relation's prediction computed by exact division.  A precomputed seed
    for the chain may be passed to amortize transport across several moves.
    """
    if not movable(chain, s):
        return MoveReport(False, "illegal", [f"position {s} is not movable"])
    move = classify_move(chain, s)
    if not move.is_tsystem:
        return MoveReport(True, "transposition", ["no mutation; permutation only"])

    relation = t_relation(seq, move.ibox)
    if box_seed is None:
        box_seed = seed_from_chain(seq, chain)
    old = chain.box(s)
    new = box_move(chain, s).box(s)
    if {old, new} != set(relation.lhs):
        return MoveReport(
            False, "tsystem", [f"moved pair {old},{new} differs from {relation.lhs}"]
        )

    lines = [str(relation)]
    variables = box_seed.seed.variables
    missing = [
        box
        for group in (relation.rhs_main, relation.rhs_adjacent)
        for box in group
        if box not in variables
    ]
    if missing:
        return MoveReport(
            False, "tsystem", lines + [f"participants missing from chain: {missing}"]
        )

    nvars = len(box_seed.initial_boxes)
    prod_main = Laurent.one(nvars)
    for box in relation.rhs_main:
        prod_main = prod_main * variables[box]
    prod_adj = Laurent.one(nvars)
    for box in relation.rhs_adjacent:
        prod_adj = prod_adj * variables[box]
    predicted = (prod_main + prod_adj).exact_div(variables[old])

    mutated = mutate_seed(box_seed.seed, old)
    ok = mutated.variables[old] == predicted
    if not ok:
        lines.append("mutated variable does not match the T-system prediction")
    # the matrix column must consist of exactly the relation participants
    column = box_seed.seed.bmat.column(old)
    plus = {box for box, v in column.items() if v == 1}
    minus = {box for box, v in column.items() if v == -1}
    expected_sides = {
        frozenset(b for b in relation.rhs_main if b in variables),
        frozenset(b for b in relation.rhs_adjacent if b in variables),
    }
    if {frozenset(plus), frozenset(minus)} != expected_sides or any(
        abs(v) != 1 for v in column.values()
    ):
        ok = False
        lines.append(f"column at {old} is {column}, not the relation participants")
    # after the move, the chain's boxes are exactly the seed's keys
    moved_chain = box_move(chain, s)
    if set(moved_chain.boxes) != (set(chain.boxes) - {old}) | {new}:
        ok = False
        lines.append("moved chain's box set disagrees with the mutation relabel")
    return MoveReport(ok, "tsystem", lines)


def vinout_check(seq: AdmissibleSequence, a: int, b: int, s: int) -> bool:
    """Column law at an exchangeable s: +1 on {s+} and the incoming diagonal
    set, -1 on {s-} and the outgoing one, everything clipped to [a, b]."""
    sm = seq.idx_minus(s)
    if not (a <= sm < s <= b):
        raise ValueError(f"{s} is not exchangeable in [{a},{b}]")
    bmat = gls_exchange_matrix(seq, a, b)
    column = bmat.column(s)

    sp = seq.idx_plus(s)
    plus = {sp} if sp <= b else set()
    minus = {sm}
    for t in range(a, b + 1):
        if t == s or not seq.datum.adjacent(seq.i(s), seq.i(t)):
            continue
        tm = seq.idx_minus(t)
        if tm < sm < t < s:
            plus.add(t)
        if sm < tm < s < t:
            minus.add(t)
    expected = {t: 1 for t in plus}
    expected.update({t: -1 for t in minus})
    return column == expected
