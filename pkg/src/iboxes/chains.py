"""i-boxes, admissible chains, box moves, and T-equivalence paths.

An i-box over an ambient sequence is an integer interval [a, b] whose two
endpoint colors agree.  An admissible chain of length l grows an interval one
index at a time from a seed point a; a code letter L (resp. R) records that
the k-th envelope extended the previous one to the left (resp. right), and
the k-th box saturates the fresh endpoint:

    code letter L:  box = [atilde, btilde(i_atilde)^-]   (written [a, b})
    code letter R:  box = [atilde(i_btilde)^+, btilde]   (written {a, b])

A box move at position s flips the code at {s-1, s}; at s = 1 it instead
flips the first letter and shifts the seed point one step outward.  The move
either transposes two boxes (when the envelope above is not an i-box) or
trades a box for its T-system partner.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from iboxes.sequences import AdmissibleSequence


@dataclass(frozen=True, order=True)
class IBox:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError(f"i-box needs a <= b, got [{self.a},{self.b}]")

    def __str__(self) -> str:
        return f"[{self.a}]" if self.a == self.b else f"[{self.a},{self.b}]"

    @property
    def single(self) -> bool:
        return self.a == self.b


def is_ibox(seq: AdmissibleSequence, a: int, b: int) -> bool:
    return a <= b and seq.i(a) == seq.i(b)


def color_multiplicity(seq: AdmissibleSequence, box: IBox) -> int:
    """|[a,b]|_phi: how many positions inside carry the endpoint color."""
    c = seq.i(box.a)
    return sum(1 for t in range(box.a, box.b + 1) if seq.i(t) == c)


def effective_left(seq: AdmissibleSequence, a: int, b: int) -> IBox:
    """[a, b}: shrink the right end to the last occurrence of color i_a."""
    return IBox(a, seq.idx_color_minus(b, seq.i(a)))


def effective_right(seq: AdmissibleSequence, a: int, b: int) -> IBox:
    """{a, b]: shrink the left end to the first occurrence of color i_b."""
    return IBox(seq.idx_color_plus(a, seq.i(b)), b)


class Chain:
    """An admissible chain, stored as (base point, code) with derived boxes."""

    def __init__(self, seq: AdmissibleSequence, base: int, code: tuple[str, ...]):
        if any(c not in ("L", "R") for c in code):
            raise ValueError("code letters must be 'L' or 'R'")
        self.seq = seq
        self.base = base
        self.code = tuple(code)

        envelopes = [(base, base)]
        boxes = [IBox(base, base)]
        for letter in code:
            lo, hi = envelopes[-1]
            if letter == "L":
                lo -= 1
                boxes.append(effective_left(seq, lo, hi))
            else:
                hi += 1
                boxes.append(effective_right(seq, lo, hi))
            envelopes.append((lo, hi))
        self.envelopes = tuple(envelopes)
        self.boxes = tuple(boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def range(self) -> tuple[int, int]:
        return self.envelopes[-1]

    def box(self, k: int) -> IBox:
        """The k-th box, 1-indexed."""
        return self.boxes[k - 1]

    def envelope(self, k: int) -> tuple[int, int]:
        return self.envelopes[k - 1]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Chain)
            and other.seq == self.seq
            and other.base == self.base
            and other.code == self.code
        )

    def __hash__(self) -> int:
        return hash((self.seq, self.base, self.code))

    def __repr__(self) -> str:
        return f"Chain({self.code_string()!r})"

    def code_string(self) -> str:
        return f"{self.base}:{''.join(self.code)}"

    def pretty(self) -> str:
        return "(" + ",".join(str(b) for b in self.boxes) + ")"

    def to_json(self) -> dict:
        return {"a": self.base, "code": "".join(self.code)}


_CHAIN_RE = re.compile(r"^\s*(-?\d+)\s*:\s*([LR]*)\s*$")


def parse_chain(seq: AdmissibleSequence, text: str) -> Chain:
    """Parse the compact "a:LRL" form."""
    m = _CHAIN_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse chain {text!r}")
    return Chain(seq, int(m.group(1)), tuple(m.group(2)))


def expand_code(seq: AdmissibleSequence, a: int, code: tuple[str, ...] | str) -> Chain:
    return Chain(seq, a, tuple(code))


def canonical_chain(seq: AdmissibleSequence, a: int, b: int) -> Chain:
    """The all-L chain with range [a, b]: boxes [s, b} for s = b..a."""
    if a > b:
        raise ValueError("empty range")
    return Chain(seq, b, ("L",) * (b - a))


def boxes_commute(seq: AdmissibleSequence, b1: IBox, b2: IBox) -> bool:
    """Two i-boxes commute if one nests strictly between the other's color gaps."""
    a1m = seq.idx_minus(b1.a)
    b1p = seq.idx_plus(b1.b)
    if a1m < b2.a and b2.b < b1p:
        return True
    a2m = seq.idx_minus(b2.a)
    b2p = seq.idx_plus(b2.b)
    return a2m < b1.a and b1.b < b2p


def movable(chain: Chain, s: int) -> bool:
    """Whether the box move B_s applies: s=1 always, else code[s-1] != code[s]."""
    if not 1 <= s < len(chain):
        return False
    return s == 1 or chain.code[s - 2] != chain.code[s - 1]


def box_move(chain: Chain, s: int) -> Chain:
    """Flip the code at {s-1, s}; at s=1, shift the base outward instead."""
    if not movable(chain, s):
        raise ValueError(f"position {s} is not movable")
    flip = {"L": "R", "R": "L"}
    code = list(chain.code)
    base = chain.base
    if s == 1:
        base = base - 1 if code[0] == "L" else base + 1
        code[0] = flip[code[0]]
    else:
        code[s - 2] = flip[code[s - 2]]
        code[s - 1] = flip[code[s - 1]]
    return Chain(chain.seq, base, tuple(code))


@dataclass(frozen=True)
class Move:
    kind: str  # "transposition" | "tsystem"
    ibox: IBox | None = None

    @property
    def is_tsystem(self) -> bool:
        return self.kind == "tsystem"


def classify_move(chain: Chain, s: int) -> Move:
    """A move is a T-system iff the envelope it shuffles inside is an i-box."""
    if not movable(chain, s):
        raise ValueError(f"position {s} is not movable")
    lo, hi = chain.envelope(s + 1)
    if chain.seq.i(lo) == chain.seq.i(hi):
        return Move("tsystem", IBox(lo, hi))
    return Move("transposition")


def movable_positions(chain: Chain) -> tuple[tuple[int, Move], ...]:
    return tuple((s, classify_move(chain, s)) for s in range(1, len(chain)) if movable(chain, s))


def normalization_moves(chain: Chain) -> list[int]:
    """Moves carrying the chain to the all-L normal form of its range.

    Repeatedly bubble the leftmost R letter to the front (each swap is a move
    at the boundary of unequal letters) and retire it with a move at s=1.
    """
    moves: list[int] = []
    cur = chain
    while "R" in cur.code:
        j = cur.code.index("R") + 1  # code position, 1-based move index
        while j > 1:
            moves.append(j)
            cur = box_move(cur, j)
            j -= 1
        moves.append(1)
        cur = box_move(cur, 1)
    return moves


def t_path(chain1: Chain, chain2: Chain) -> list[int]:
    """A box-move path from chain1 to chain2 (same ambient range required)."""
    if chain1.seq != chain2.seq:
        raise ValueError("chains live over different sequences")
    if chain1.range != chain2.range:
        raise ValueError("ranges differ")
    forward = normalization_moves(chain1)
    backward = normalization_moves(chain2)
    # each box move is an involution, so the reversed move list undoes it,
    # and a shared tail of the two normalizations cancels outright
    while forward and backward and forward[-1] == backward[-1]:
        forward.pop()
        backward.pop()
    return forward + list(reversed(backward))


def apply_moves(chain: Chain, moves: list[int]) -> Chain:
    for s in moves:
        chain = box_move(chain, s)
    return chain


class LazyChain:
    """An infinite admissible chain: a base point plus a code-letter rule.

    Only finite prefixes are ever materialized; every algorithm runs on
    :meth:`prefix`.  An infinite range has no saturating boxes, so the frozen
    set of a lazy chain is empty.
    """

    def __init__(self, seq: AdmissibleSequence, base: int, letter_at) -> None:
        self.seq = seq
        self.base = base
        self._letter_at = letter_at  # 1-based position of the code letter

    def prefix(self, length: int) -> Chain:
        """The finite admissible chain of the first `length` boxes."""
        if length < 1:
            raise ValueError("prefix length must be positive")
        return Chain(self.seq, self.base, tuple(self._letter_at(k) for k in range(1, length)))


def frozen_indices(chain: Chain | LazyChain) -> frozenset[int]:
    """Chain positions whose box saturates the whole range in its color."""
    if isinstance(chain, LazyChain):
        return frozenset()
    seq = chain.seq
    lo, hi = chain.range
    saturators = set()
    for c in {seq.i(t) for t in range(lo, hi + 1)}:
        saturators.add(IBox(seq.idx_color_plus(lo, c), seq.idx_color_minus(hi, c)))
    return frozenset(k for k in range(1, len(chain) + 1) if chain.box(k) in saturators)


def member_index(chain: Chain, box: IBox) -> int | None:
    """The chain position carrying the given box, if present."""
    for k in range(1, len(chain) + 1):
        if chain.box(k) == box:
            return k
    return None
