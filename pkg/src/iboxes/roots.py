"""Simply laced root systems, Weyl words, and the folded data of affine types.

Everything here is exact integer combinatorics.  A simply laced diagram of
rank n is stored as an adjacency structure on the nodes 1..n; root vectors
are integer coordinate tuples in the simple-root basis; Weyl group elements
act through integer matrices on that basis, so equality of group elements is
matrix equality.  Ranks never exceed 8, which keeps every enumeration tiny.

Each affine type carries a folded Cartan datum: the simply laced diagram,
a diagram automorphism ``sigma``, the orbit-size function ``d``, the
projection ``pi`` onto the orbit index set, the dual Coxeter number and the
length of the longest Weyl element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

Node = int
RootVector = tuple[int, ...]
WeylWord = tuple[Node, ...]
# w acts on the simple-root basis; MAT[j-1] is the coordinate tuple of w(alpha_j).
WeylMatrix = tuple[RootVector, ...]


class UnsupportedTypeError(ValueError):
    """Raised for affine type labels outside the supported tables."""


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _diagram_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family == "A":
        return _chain_edges(n)
    if family == "D":
        # 1 - 2 - ... - (n-1) with n hanging off n-2
        return _chain_edges(n - 1) + [(n - 2, n)]
    if family == "E":
        # Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)]
        if n >= 7:
            chain.append((6, 7))
        if n == 8:
            chain.append((7, 8))
        return chain + [(2, 4)]
    raise UnsupportedTypeError(f"no simply laced diagram of family {family}")


@dataclass(frozen=True)
class Diagram:
    """A simply laced Dynkin diagram on nodes 1..rank."""

    label: str
    rank: int
    edges: frozenset[tuple[int, int]]

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def neighbors(self, i: Node) -> tuple[Node, ...]:
        return tuple(
            b if a == i else a for (a, b) in sorted(self.edges) if i in (a, b)
        )

    def adjacent(self, i: Node, j: Node) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def distance(self, i: Node, j: Node) -> int:
        """Graph distance between two nodes."""
        if i == j:
            return 0
        seen = {i}
        frontier = [i]
        dist = 0
        while frontier:
            dist += 1
            nxt = []
            for v in frontier:
                for w in self.neighbors(v):
                    if w == j:
                        return dist
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        raise ValueError(f"nodes {i},{j} not connected")

    def cartan(self, i: Node, j: Node) -> int:
        """Simple-root pairing <h_i, alpha_j>: 2, -1 on edges, 0 otherwise."""
        if i == j:
            return 2
        return -1 if self.adjacent(i, j) else 0


def diagram(family: str, n: int) -> Diagram:
    edges = frozenset((min(a, b), max(a, b)) for a, b in _diagram_edges(family, n))
    return Diagram(label=f"{family}{n}", rank=n, edges=edges)


# ---------------------------------------------------------------------------
# root vectors and Weyl words


def simple_root(diag: Diagram, i: Node) -> RootVector:
    v = [0] * diag.rank
    v[i - 1] = 1
    return tuple(v)


def pairing(diag: Diagram, i: Node, v: RootVector) -> int:
    """<h_i, v> for v written in the simple-root basis."""
    return sum(c * diag.cartan(i, j) for j, c in zip(diag.nodes, v))


def reflect(diag: Diagram, i: Node, v: RootVector) -> RootVector:
    """Simple reflection s_i(v) = v - <h_i, v> alpha_i."""
    if i not in diag.nodes:
        raise IndexError(f"node {i} out of range")
    c = pairing(diag, i, v)
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def identity_matrix(diag: Diagram) -> WeylMatrix:
    return tuple(simple_root(diag, j) for j in diag.nodes)


def apply_matrix(mat: WeylMatrix, v: RootVector) -> RootVector:
    n = len(mat)
    out = [0] * n
    for j, c in enumerate(v):
        if c:
            col = mat[j]
            for i in range(n):
                out[i] += c * col[i]
    return tuple(out)


def word_matrix(diag: Diagram, word: WeylWord) -> WeylMatrix:
    """Matrix of s_{i_1} s_{i_2} ... s_{i_k} acting on simple roots."""
    cols = []
    for j in diag.nodes:
        v = simple_root(diag, j)
        for i in reversed(word):
            v = reflect(diag, i, v)
        cols.append(v)
    return tuple(cols)


@lru_cache(maxsize=None)
def positive_roots(diag: Diagram) -> tuple[RootVector, ...]:
    """All positive roots, by closure of the simples under simple reflections."""
    roots: set[RootVector] = {simple_root(diag, i) for i in diag.nodes}
    frontier = set(roots)
    while frontier:
        nxt: set[RootVector] = set()
        for v in frontier:
            for i in diag.nodes:
                w = reflect(diag, i, v)
                if all(c >= 0 for c in w) and w not in roots:
                    roots.add(w)
                    nxt.add(w)
        frontier = nxt
    return tuple(sorted(roots))


def inversions(diag: Diagram, mat: WeylMatrix) -> int:
    """Number of positive roots sent to negative ones: the Weyl length."""
    count = 0
    for beta in positive_roots(diag):
        img = apply_matrix(mat, beta)
        if all(c <= 0 for c in img):
            count += 1
    return count


def is_reduced(diag: Diagram, word: WeylWord) -> bool:
    """A word is reduced iff its length equals the inversion count of its element."""
    return inversions(diag, word_matrix(diag, word)) == len(word)


@lru_cache(maxsize=None)
def longest_word(diag: Diagram) -> WeylWord:
    """A reduced word for w0, by walking rho down to -rho.

    At each step the smallest node with a positive fundamental-weight
    coordinate is reflected away, so the output is deterministic.
    """
    lam = [1] * diag.rank  # coordinates of rho on the fundamental weights
    word: list[Node] = []
    while any(c > 0 for c in lam):
        i = next(j for j in diag.nodes if lam[j - 1] > 0)
        ci = lam[i - 1]
        # s_i(lam) = lam - lam_i * alpha_i, with alpha_i = sum_j a_{ji} varpi_j
        for j in diag.nodes:
            lam[j - 1] -= ci * diag.cartan(j, i)
        word.append(i)
    return tuple(word)


def beta_sequence(diag: Diagram, word: WeylWord) -> tuple[RootVector, ...]:
    """beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for each letter of the word."""
    out = []
    for k, i in enumerate(word):
        v = simple_root(diag, i)
        for s in reversed(word[:k]):
            v = reflect(diag, s, v)
        out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# folded Cartan data

_TAG_RE = re.compile(r"^([A-G])\s*(\d+)\s*(?:\^?\(?(\d)\)?)?$")


def _parse_tag(tag: str) -> tuple[str, int, int]:
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise UnsupportedTypeError(f"unsupported affine type {tag!r}")
    family, rank, twist = m.group(1), int(m.group(2)), int(m.group(3) or 1)
    return family, rank, twist


class FoldedCartanDatum:
    """The simply laced diagram, automorphism and numerology of an affine type.

    Attributes
    ----------
    affine_tag : normalized label, e.g. ``"A3(1)"`` or ``"D4(3)"``.
    diagram    : the simply laced diagram Delta.
    sigma      : diagram automorphism as a dict on nodes.
    pi         : projection onto the orbit index set (``g0`` labels).
    d          : node -> orbit size (always 1 or ord_sigma).
    ord_sigma  : order of sigma.
    h_dual     : dual Coxeter number of the affine type.
    ell        : length of the longest Weyl element of Delta.
    star       : the involution i -> i* with alpha_{i*} = -w0(alpha_i).
    """

    def __init__(
        self,
        affine_tag: str,
        diag: Diagram,
        sigma: dict[Node, Node],
        pi: dict[Node, int],
        h_dual: int,
    ) -> None:
        self.affine_tag = affine_tag
        self.diagram = diag
        self.sigma = dict(sigma)
        self.pi = dict(pi)
        self.h_dual = h_dual

        order = 1
        perm = dict(sigma)
        while any(perm[i] != i for i in diag.nodes):
            perm = {i: sigma[perm[i]] for i in diag.nodes}
            order += 1
        self.ord_sigma = order

        self.d = {i: len(self._orbit(i)) for i in diag.nodes}
        self.ell = len(positive_roots(diag))

        w0 = word_matrix(diag, longest_word(diag))
        star: dict[Node, Node] = {}
        for i in diag.nodes:
            img = apply_matrix(w0, simple_root(diag, i))
            neg = tuple(-c for c in img)
            star[i] = next(j for j in diag.nodes if simple_root(diag, j) == neg)
        self.star = star

        self._check()

    def _orbit(self, i: Node) -> set[Node]:
        orb = {i}
        j = self.sigma[i]
        while j not in orb:
            orb.add(j)
            j = self.sigma[j]
        return orb

    def _check(self) -> None:
        diag = self.diagram
        for a, b in diag.edges:
            sa, sb = self.sigma[a], self.sigma[b]
            if not diag.adjacent(sa, sb):
                raise ValueError("sigma does not preserve the diagram")
            if not diag.adjacent(self.star[a], self.star[b]):
                raise ValueError("star does not preserve the diagram")
        for i in diag.nodes:
            if self.d[i] not in (1, self.ord_sigma):
                raise ValueError("orbit sizes must be 1 or ord(sigma)")
            if self.star[self.star[i]] != i:
                raise ValueError("star must be an involution")

    # -- conveniences used across the package

    @property
    def nodes(self) -> tuple[Node, ...]:
        return self.diagram.nodes

    def adjacent(self, i: Node, j: Node) -> bool:
        return self.diagram.adjacent(i, j)

    def neighbors(self, i: Node) -> tuple[Node, ...]:
        return self.diagram.neighbors(i)

    def star_power(self, i: Node, k: int) -> Node:
        return self.star[i] if k % 2 else i

    def __repr__(self) -> str:
        return f"FoldedCartanDatum({self.affine_tag})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FoldedCartanDatum) and other.affine_tag == self.affine_tag

    def __hash__(self) -> int:
        return hash(self.affine_tag)

    def to_json(self) -> dict:
        return {
            "affine_tag": self.affine_tag,
            "diagram": self.diagram.label,
            "nodes": list(self.nodes),
            "edges": sorted(map(list, self.diagram.edges)),
            "sigma": {str(i): self.sigma[i] for i in self.nodes},
            "pi": {str(i): self.pi[i] for i in self.nodes},
            "d": {str(i): self.d[i] for i in self.nodes},
            "ord_sigma": self.ord_sigma,
            "h_dual": self.h_dual,
            "ell": self.ell,
            "star": {str(i): self.star[i] for i in self.nodes},
        }


def _untwisted(family: str, n: int) -> FoldedCartanDatum:
    tag = f"{family}{n}(1)"
    if family == "A" and n >= 1:
        diag = diagram("A", n)
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes},
                                 {i: i for i in diag.nodes}, n + 1)
    if family == "B" and n >= 2:
        diag = diagram("A", 2 * n - 1)
        sigma = {k: 2 * n - k for k in diag.nodes}
        pi = {k: min(k, 2 * n - k) for k in diag.nodes}
        return FoldedCartanDatum(tag, diag, sigma, pi, 2 * n - 1)
    if family == "C" and n >= 3:
        diag = diagram("D", n + 1)
        sigma = {k: k for k in diag.nodes}
        sigma[n], sigma[n + 1] = n + 1, n
        pi = {k: min(k, n) for k in diag.nodes}
        return FoldedCartanDatum(tag, diag, sigma, pi, n + 1)
    if family == "D" and n >= 4:
        diag = diagram("D", n)
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes},
                                 {i: i for i in diag.nodes}, 2 * n - 2)
    if family == "E" and n in (6, 7, 8):
        diag = diagram("E", n)
        h = {6: 12, 7: 18, 8: 30}[n]
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes},
                                 {i: i for i in diag.nodes}, h)
    if family == "F" and n == 4:
        diag = diagram("E", 6)
        sigma = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
        pi = {2: 1, 4: 2, 3: 3, 5: 3, 1: 4, 6: 4}
        return FoldedCartanDatum(tag, diag, sigma, pi, 9)
    if family == "G" and n == 2:
        diag = diagram("D", 4)
        sigma = {1: 3, 3: 4, 4: 1, 2: 2}
        pi = {1: 1, 3: 1, 4: 1, 2: 2}
        return FoldedCartanDatum(tag, diag, sigma, pi, 4)
    raise UnsupportedTypeError(f"unsupported affine type {tag}")


def _twisted(family: str, n: int, twist: int) -> FoldedCartanDatum:
    # Twisted rows share Delta, sigma=id and h_dual with their untwisted
    # counterpart; only pi differs.
    tag = f"{family}{n}({twist})"
    if family == "A" and twist == 2 and n >= 3:
        diag = diagram("A", n)
        half = (n + 1) // 2
        pi = {k: (k if k <= half else n + 1 - k) for k in diag.nodes}
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes}, pi, n + 1)
    if family == "D" and twist == 2 and n >= 4:
        diag = diagram("D", n)
        pi = {k: min(k, n - 1) for k in diag.nodes}
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes}, pi, 2 * n - 2)
    if family == "E" and twist == 2 and n == 6:
        diag = diagram("E", 6)
        pi = {1: 1, 6: 1, 3: 2, 5: 2, 4: 3, 2: 4}
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes}, pi, 12)
    if family == "D" and twist == 3 and n == 4:
        diag = diagram("D", 4)
        pi = {1: 1, 3: 1, 4: 1, 2: 2}
        return FoldedCartanDatum(tag, diag, {i: i for i in diag.nodes}, pi, 6)
    raise UnsupportedTypeError(f"unsupported affine type {tag}")


_CACHE: dict[tuple[str, int, int], FoldedCartanDatum] = {}


def folded_datum(affine_tag: str) -> FoldedCartanDatum:
    """Folded Cartan datum for an affine type label such as ``"A3"`` or ``"D4(3)"``."""
    family, n, twist = _parse_tag(affine_tag)
    key = (family, n, twist)
    if key not in _CACHE:
        _CACHE[key] = _untwisted(family, n) if twist == 1 else _twisted(family, n, twist)
    return _CACHE[key]
