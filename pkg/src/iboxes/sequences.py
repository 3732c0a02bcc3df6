"""Admissible sequences of (node, level) pairs and their index calculus.

An admissible sequence is a Z-indexed sequence (i_k, p_k) with values in
I x Z such that

  (a) p_{k+} = p_k + 2 d_{i_k}, where k+ is the next index of color i_k,
  (b) p_t = p_s + min(d_{i_s}, d_{i_t}) whenever the colors are adjacent
      and t- < s < t < s+,
  (c) p_t - (p_s + 2) is divisible by 2 d_{i_s} whenever i_t = sigma(i_s),
  (d) every window of ell consecutive colors is a reduced word for w0.

Only one period k = 1..ell is stored; the rest is forced by the twist rule
i_{k+ell} = star(i_k), p_{k+ell} = p_k + ord(sigma) * h_dual.

Validation checks (a)-(c) for all index pairs drawn from [1-ell, 2ell] and
(d) for the ell windows starting in [1, ell].  That certifies every k: each
condition only constrains indices within one period of each other, and all
four are invariant under the period map k -> k + ell, because the star twist
preserves adjacency, orbit sizes and sigma-orbits (star commutes with sigma
on the folded tables), shifts every level by the same constant, and
conjugation by w0 carries reduced words to reduced words.
"""

from __future__ import annotations

from iboxes.roots import FoldedCartanDatum, Node, WeylWord, is_reduced, word_matrix
from iboxes.qdata import (
    QDatum,
    ValidationResult,
    adapted_word,
    default_q_datum,
    is_adapted,
    reflect_q,
)


class AdmissibleSequence:
    """One stored period of a Z-indexed admissible sequence."""

    def __init__(
        self,
        datum: FoldedCartanDatum,
        period_i: tuple[Node, ...],
        period_p: tuple[int, ...],
    ) -> None:
        if len(period_i) != datum.ell or len(period_p) != datum.ell:
            raise ValueError(f"period must have length ell = {datum.ell}")
        self.datum = datum
        self.period_i = tuple(period_i)
        self.period_p = tuple(period_p)

    # -- total accessors on Z

    def i(self, k: int) -> Node:
        ell = self.datum.ell
        j = (k - 1) % ell
        m = (k - 1 - j) // ell
        return self.datum.star_power(self.period_i[j], m)

    def p(self, k: int) -> int:
        ell = self.datum.ell
        j = (k - 1) % ell
        m = (k - 1 - j) // ell
        return self.period_p[j] + m * self.datum.ord_sigma * self.datum.h_dual

    def pair(self, k: int) -> tuple[Node, int]:
        return self.i(k), self.p(k)

    def colors(self, lo: int, hi: int) -> tuple[Node, ...]:
        return tuple(self.i(k) for k in range(lo, hi + 1))

    # -- index calculus; totality is guaranteed by 2*ell periodicity of colors

    def idx_plus(self, k: int) -> int:
        """min{t > k : i_t = i_k}."""
        c = self.i(k)
        for t in range(k + 1, k + 2 * self.datum.ell + 1):
            if self.i(t) == c:
                return t
        raise AssertionError("color vanished from the sequence")

    def idx_minus(self, k: int) -> int:
        """max{t < k : i_t = i_k}."""
        c = self.i(k)
        for t in range(k - 1, k - 2 * self.datum.ell - 1, -1):
            if self.i(t) == c:
                return t
        raise AssertionError("color vanished from the sequence")

    def idx_color_plus(self, k: int, j: Node) -> int:
        """min{t >= k : i_t = j}."""
        for t in range(k, k + 2 * self.datum.ell + 1):
            if self.i(t) == j:
                return t
        raise AssertionError("color vanished from the sequence")

    def idx_color_minus(self, k: int, j: Node) -> int:
        """max{t <= k : i_t = j}."""
        for t in range(k, k - 2 * self.datum.ell - 1, -1):
            if self.i(t) == j:
                return t
        raise AssertionError("color vanished from the sequence")

    def shift(self, m: int) -> "AdmissibleSequence":
        """The sequence re-based at k -> k + m."""
        ell = self.datum.ell
        return AdmissibleSequence(
            self.datum,
            tuple(self.i(k + m) for k in range(1, ell + 1)),
            tuple(self.p(k + m) for k in range(1, ell + 1)),
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AdmissibleSequence)
            and other.datum == self.datum
            and other.period_i == self.period_i
            and other.period_p == self.period_p
        )

    def __hash__(self) -> int:
        return hash((self.datum, self.period_i, self.period_p))

    def __repr__(self) -> str:
        pairs = ",".join(f"({i},{p})" for i, p in zip(self.period_i, self.period_p))
        return f"AdmissibleSequence({self.datum.affine_tag}: {pairs})"

    def to_json(self) -> dict:
        return {
            "type": self.datum.affine_tag,
            "period_i": list(self.period_i),
            "period_p": list(self.period_p),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "AdmissibleSequence":
        from iboxes.roots import folded_datum

        return cls(
            folded_datum(payload["type"]),
            tuple(payload["period_i"]),
            tuple(payload["period_p"]),
        )


def from_q_datum(q: QDatum, word: WeylWord) -> AdmissibleSequence:
    """Admissible sequence of a height function and an adapted reduced word."""
    if not is_reduced(q.datum.diagram, word) or len(word) != q.datum.ell:
        raise ValueError("word not reduced")
    if not is_adapted(q, word):
        raise ValueError("word not adapted")
    levels = []
    cur = q
    for i in word:
        levels.append(cur.xi[i])
        cur = reflect_q(cur, i)
    return AdmissibleSequence(q.datum, tuple(word), tuple(levels))


def to_q_datum(seq: AdmissibleSequence) -> tuple[QDatum, WeylWord]:
    """Recover the height function (first level of each color) and base word."""
    check = validate(seq)
    if not check:
        raise ValueError(f"invalid sequence: {check.violations}")
    xi: dict[Node, int] = {}
    for i, p in zip(seq.period_i, seq.period_p):
        xi.setdefault(i, p)
    if set(xi) != set(seq.datum.nodes):
        raise ValueError("period does not use every node")
    return QDatum(seq.datum, xi), seq.period_i


def validate(seq: AdmissibleSequence) -> ValidationResult:
    """Check conditions (a)-(d) on the certifying window [1-ell, 2ell]."""
    datum = seq.datum
    ell = datum.ell
    bad: list[str] = []
    lo, hi = 1 - ell, 2 * ell
    for s in range(lo, hi + 1):
        sp = seq.idx_plus(s)
        if seq.p(sp) != seq.p(s) + 2 * datum.d[seq.i(s)]:
            bad.append(f"(a) fails at s={s}: p_{sp}={seq.p(sp)} != p_{s}+2d")
    for s in range(lo, hi + 1):
        for t in range(s + 1, min(s + 2 * ell, hi) + 1):
            ci, cj = seq.i(s), seq.i(t)
            if not datum.adjacent(ci, cj):
                continue
            if seq.idx_minus(t) < s and t < seq.idx_plus(s):
                want = seq.p(s) + min(datum.d[ci], datum.d[cj])
                if seq.p(t) != want:
                    bad.append(f"(b) fails at s={s},t={t}: p_t={seq.p(t)} != {want}")
    for s in range(lo, hi + 1):
        for t in range(lo, hi + 1):
            if seq.i(t) == datum.sigma[seq.i(s)]:
                if (seq.p(t) - seq.p(s) - 2) % (2 * datum.d[seq.i(s)]) != 0:
                    bad.append(f"(c) fails at s={s},t={t}")
    w0 = word_matrix(datum.diagram, seq.colors(1, ell))
    if not is_reduced(datum.diagram, seq.colors(1, ell)):
        bad.append("(d) base window not reduced")
    else:
        for k in range(2, ell + 1):
            window = seq.colors(k, k + ell - 1)
            if not is_reduced(datum.diagram, window) or word_matrix(datum.diagram, window) != w0:
                bad.append(f"(d) fails for the window starting at {k}")
    return ValidationResult(bad)


def is_height_adapted(seq: AdmissibleSequence, xi: dict[Node, int]) -> bool:
    """Whether the below-xi half of the lattice is exactly {(i_k, p_k) : k <= 0}."""
    # Equivalent finite check: within one period, k <= 0 iff p_k < xi on color.
    ell = seq.datum.ell
    for k in range(1 - ell, ell + 1):
        below = seq.p(k) < xi[seq.i(k)]
        if below != (k <= 0):
            return False
    return True


def canonical_sequence(tag_or_datum, xi: dict[Node, int] | None = None) -> AdmissibleSequence:
    """The sequence of the default (or given) height function and its reading word."""
    from iboxes.roots import folded_datum

    datum = tag_or_datum if isinstance(tag_or_datum, FoldedCartanDatum) else folded_datum(tag_or_datum)
    q = default_q_datum(datum) if xi is None else QDatum(datum, xi)
    return from_q_datum(q, adapted_word(q))


def staircase_sequence(tag_or_datum) -> AdmissibleSequence:
    """The sequence of the staircase example heights and their reading word."""
    from iboxes.roots import folded_datum
    from iboxes.qdata import example_height

    datum = tag_or_datum if isinstance(tag_or_datum, FoldedCartanDatum) else folded_datum(tag_or_datum)
    q = QDatum(datum, example_height(datum))
    return from_q_datum(q, adapted_word(q))
