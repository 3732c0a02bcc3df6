"""Height functions on folded diagrams, reflection functors, and the level lattice.

A height function xi on (Delta, sigma) assigns integers to the nodes so that

  (i)  adjacent nodes of equal orbit size d differ by exactly d, and
  (ii) for an edge joining a fixed node i (d_i = 1) to a node j of a full
       orbit, exactly one orbit member j0 satisfies |xi_i - xi_{j0}| = 1,
       and the orbit heights step up by 2 along sigma from j0.

The pair of a folded datum with such a height function drives everything
downstream: sinks and reflection functors, the lattice of admissible
(node, level) pairs, the arrow pattern between neighboring columns, and the
bijection ``phi`` onto pairs (positive root, dual level).
"""

from __future__ import annotations

from dataclasses import dataclass

from iboxes.roots import (
    FoldedCartanDatum,
    Node,
    RootVector,
    WeylWord,
    beta_sequence,
    folded_datum,
    is_reduced,
    simple_root,
)


@dataclass(frozen=True)
class HatIndex:
    """A (node, level) pair in the lattice attached to a height function."""

    node: Node
    level: int


class ValidationResult:
    """Boolean verdict plus the list of violated constraints."""

    def __init__(self, violations: list[str]):
        self.violations = violations

    def __bool__(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:
        return f"ValidationResult(ok={bool(self)}, violations={self.violations!r})"


class QDatum:
    """A folded Cartan datum together with a height function."""

    def __init__(self, datum: FoldedCartanDatum, xi: dict[Node, int]):
        if set(xi) != set(datum.nodes):
            raise ValueError("height function must be defined on every node")
        self.datum = datum
        self.xi = dict(xi)

    def __repr__(self) -> str:
        heights = ",".join(str(self.xi[i]) for i in self.datum.nodes)
        return f"QDatum({self.datum.affine_tag}, xi=({heights}))"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QDatum)
            and other.datum == self.datum
            and other.xi == self.xi
        )

    def __hash__(self) -> int:
        return hash((self.datum, tuple(sorted(self.xi.items()))))

    def to_json(self) -> dict:
        return {"type": self.datum.affine_tag, "xi": {str(i): v for i, v in self.xi.items()}}

    @classmethod
    def from_json(cls, payload: dict) -> "QDatum":
        datum = folded_datum(payload["type"])
        xi = {int(k): int(v) for k, v in payload["xi"].items()}
        return cls(datum, xi)


def validate_q_datum(q: QDatum) -> ValidationResult:
    """Check the two height-function conditions, listing every violated pair."""
    datum, xi = q.datum, q.xi
    bad: list[str] = []
    seen_orbit_edges: set[tuple[Node, frozenset[Node]]] = set()
    for a, b in sorted(datum.diagram.edges):
        da, db = datum.d[a], datum.d[b]
        if da == db:
            if abs(xi[a] - xi[b]) != da:
                bad.append(f"edge ({a},{b}): |xi_{a} - xi_{b}| != {da}")
            continue
        i, j = (a, b) if da < db else (b, a)
        orbit = frozenset(k for k in datum.nodes if datum.pi[k] == datum.pi[j])
        key = (i, orbit)
        if key in seen_orbit_edges:
            continue
        seen_orbit_edges.add(key)
        candidates = []
        for j0 in sorted(orbit):
            if abs(xi[i] - xi[j0]) != 1:
                continue
            node, ok = j0, True
            for k in range(datum.ord_sigma):
                if xi[node] != xi[j0] + 2 * k:
                    ok = False
                    break
                node = datum.sigma[node]
            if ok:
                candidates.append(j0)
        if len(candidates) != 1:
            bad.append(
                f"edge ({i},{j}): {len(candidates)} orbit members step correctly, need 1"
            )
    return ValidationResult(bad)


def sinks(q: QDatum) -> tuple[Node, ...]:
    """Nodes whose height is strictly below all neighbors'."""
    return tuple(
        i
        for i in q.datum.nodes
        if all(q.xi[i] < q.xi[j] for j in q.datum.neighbors(i))
    )


def sources(q: QDatum) -> tuple[Node, ...]:
    """Nodes i with xi_i - 2 d_i strictly above xi_j - 2 d_j for all neighbors j."""
    d = q.datum.d
    return tuple(
        i
        for i in q.datum.nodes
        if all(q.xi[i] - 2 * d[i] > q.xi[j] - 2 * d[j] for j in q.datum.neighbors(i))
    )


def reflect_q(q: QDatum, i: Node) -> QDatum:
    """Reflection functor at a sink: raise its height by 2 d_i."""
    if i not in sinks(q):
        raise ValueError(f"node {i} is not a sink")
    xi = dict(q.xi)
    xi[i] += 2 * q.datum.d[i]
    return QDatum(q.datum, xi)


def reflect_q_inv(q: QDatum, i: Node) -> QDatum:
    """Inverse reflection functor at a source: lower its height by 2 d_i."""
    if i not in sources(q):
        raise ValueError(f"node {i} is not a source")
    xi = dict(q.xi)
    xi[i] -= 2 * q.datum.d[i]
    return QDatum(q.datum, xi)


def in_hat_lattice(q: QDatum, i: Node, p: int) -> bool:
    """Whether (i, p) lies in the lattice: p - xi_i divisible by 2 d_i."""
    return (p - q.xi[i]) % (2 * q.datum.d[i]) == 0


def hat_points(q: QDatum, lo: int, hi: int) -> tuple[HatIndex, ...]:
    """All lattice points with level in the closed window [lo, hi]."""
    out = []
    for i in q.datum.nodes:
        step = 2 * q.datum.d[i]
        start = lo + (q.xi[i] - lo) % step
        for p in range(start, hi + 1, step):
            out.append(HatIndex(i, p))
    return tuple(sorted(out, key=lambda x: (x.node, x.level)))


def is_adapted(q: QDatum, word: WeylWord) -> bool:
    """Whether each letter is a sink of the successively reflected height function."""
    cur = q
    for i in word:
        if i not in sinks(cur):
            return False
        cur = reflect_q(cur, i)
    return True


def adapted_word(q: QDatum) -> WeylWord:
    """The canonical adapted reduced word for w0.

    Reading the window {(i, p) : xi_i <= p < xi_{i*} + ord(sigma) h_dual} of
    the lattice in increasing level order (ties by node) gives an adapted
    reduced word: every arrow between window vertices strictly increases the
    level, so the enumeration is arrow-compatible.
    """
    datum = q.datum
    period = datum.ord_sigma * datum.h_dual
    window: list[tuple[int, Node]] = []
    for i in datum.nodes:
        p = q.xi[i]
        stop = q.xi[datum.star[i]] + period
        while p < stop:
            window.append((p, i))
            p += 2 * datum.d[i]
    window.sort()
    if len(window) != datum.ell:
        raise AssertionError("reading window has the wrong cardinality")
    return tuple(i for _, i in window)


def default_height(datum: FoldedCartanDatum) -> dict[Node, int]:
    """The package-wide default height function for each affine type.

    For trivial sigma this is the bipartite labeling by distance from node 1;
    for the folded untwisted types it is the standard staircase example.
    """
    diag = datum.diagram
    if datum.ord_sigma == 1:
        return {i: diag.distance(1, i) % 2 for i in diag.nodes}
    family = datum.affine_tag[0]
    n = int(datum.affine_tag[1:].split("(")[0])
    if family == "B":
        xi = {k: 2 * n - 1 - 2 * k for k in range(1, n)}
        xi[n] = 0
        xi.update({k: 2 * k - 2 * n - 3 for k in range(n + 1, 2 * n)})
        return xi
    if family == "C":
        xi = {k: n - 2 - k for k in range(1, n)}
        xi[n] = 0
        xi[n + 1] = 2
        return xi
    if family == "F":
        return {1: 0, 2: -2, 3: -2, 4: -3, 5: -4, 6: -2}
    if family == "G":
        return {1: -1, 2: 0, 3: 1, 4: 3}
    raise AssertionError(f"no default height for {datum.affine_tag}")


def example_height(datum: FoldedCartanDatum) -> dict[Node, int]:
    """The staircase example heights (linear orientation for A, two-tail for D)."""
    diag = datum.diagram
    family = datum.affine_tag[0]
    twist = datum.affine_tag.endswith("(1)")
    if family == "A" and twist:
        n = diag.rank
        return {i: n - i for i in diag.nodes}
    if family == "D" and twist:
        n = diag.rank
        xi = {i: n - 1 - i for i in range(1, n - 1)}
        xi[n - 1] = 0
        xi[n] = 0
        return xi
    return default_height(datum)


def default_q_datum(affine_tag: str | FoldedCartanDatum) -> QDatum:
    datum = affine_tag if isinstance(affine_tag, FoldedCartanDatum) else folded_datum(affine_tag)
    return QDatum(datum, default_height(datum))


# ---------------------------------------------------------------------------
# the bijection phi onto (positive root, dual level)


def _base_block(q: QDatum, word: WeylWord) -> tuple[tuple[Node, int], ...]:
    """(i_k, p_k) for k = 1..ell: p_k is the height of i_k after k-1 reflections."""
    if len(word) != q.datum.ell or not is_reduced(q.datum.diagram, word):
        raise ValueError("word is not a reduced word for w0")
    if not is_adapted(q, word):
        raise ValueError("word is not adapted to the height function")
    out = []
    cur = q
    for i in word:
        out.append((i, cur.xi[i]))
        cur = reflect_q(cur, i)
    return tuple(out)


def phi_q(q: QDatum, word: WeylWord, x: HatIndex) -> tuple[RootVector, int]:
    """The lattice point's (positive root, dual level) under the adapted word.

    On the base block phi(i_k, p_k) = (beta_k, 0); the full lattice is covered
    by phi(star^m(i), p + m * ord(sigma) * h_dual) = (beta, m).
    """
    if not in_hat_lattice(q, x.node, x.level):
        raise ValueError("not a lattice point")
    datum = q.datum
    block = _base_block(q, word)
    betas = beta_sequence(datum.diagram, word)
    period = datum.ord_sigma * datum.h_dual
    base_levels = [p for (_, p) in block]
    lo, hi = min(base_levels), max(base_levels)
    m_lo = -((hi - x.level) // period) - 2
    m_hi = ((x.level - lo) // period) + 2
    for m in range(m_lo, m_hi + 1):
        node = datum.star_power(x.node, m)
        p = x.level - m * period
        for k, (ik, pk) in enumerate(block):
            if ik == node and pk == p:
                return betas[k], m
    raise AssertionError("lattice point escaped the periodic base block")


def phi_q_inv(q: QDatum, word: WeylWord, beta: RootVector, m: int) -> HatIndex:
    """Inverse of :func:`phi_q`."""
    datum = q.datum
    block = _base_block(q, word)
    betas = beta_sequence(datum.diagram, word)
    for k, b in enumerate(betas):
        if b == beta:
            node, p = block[k]
            period = datum.ord_sigma * datum.h_dual
            return HatIndex(datum.star_power(node, m), p + m * period)
    raise ValueError("not a positive root of the base block")


# ---------------------------------------------------------------------------
# fundamental-module labels

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _sub(n: int) -> str:
    return str(n).translate(_SUBSCRIPTS)


def spectral_constant(datum: FoldedCartanDatum, i: Node, p: int) -> tuple[str, str]:
    """(prefix, base) so that the spectral parameter reads prefix + base^p.

    The base is "(-q)" for untwisted types with trivial sigma and for all
    twisted types, "q^{1/m}" (with a sign prefix) for the folded untwisted
    ones whose shift quantum is a root of q.
    """
    family = datum.affine_tag[0]
    diag = datum.diagram
    if datum.affine_tag.endswith("(1)"):
        m = datum.ord_sigma
        if family in ("A", "D", "E"):
            return "", "(-q)"
        if family in ("C", "G"):
            return "", f"(-q^(1/{m}))"
        if family == "B":
            n = (diag.rank + 1) // 2
            sign = "-" if diag.distance(i, n) % 2 else ""
            return sign, "(q^(1/2))"
        if family == "F":
            sign = "-" if diag.distance(i, 2) % 2 else ""
            return sign, "(q^(1/2))"
    # twisted rows
    tag = datum.affine_tag
    if tag.startswith("A") and tag.endswith("(2)"):
        n = diag.rank
        half = (n + 1) // 2
        sign = "" if i <= half or n % 2 == 0 else "-"
        return sign, "(-q)"
    if tag.startswith("D") and tag.endswith("(2)"):
        n = diag.rank - 1
        if i < n:
            k = (n + 1 - i) % 4
            return {0: "", 1: "i·", 2: "-", 3: "-i·"}[k], "(-q)"
        return ("-" if i % 2 else ""), "(-q)"
    if tag == "E6(2)":
        if i in (1, 3):
            return "", "(-q)"
        if i in (5, 6):
            return "-", "(-q)"
        return "i·", "(-q)"
    if tag == "D4(3)":
        return {1: "", 2: "-", 3: "ω", 4: "ω²"}[i], "(-q)"
    raise AssertionError(f"no spectral constant rule for {tag}")


def fundamental_label(datum: FoldedCartanDatum, i: Node, p: int) -> str:
    """Human-readable label of the fundamental class at a lattice point."""
    prefix, base = spectral_constant(datum, i, p)
    return f"V(ϖ{_sub(datum.pi[i])})_{{{prefix}{base}^{p}}}"
