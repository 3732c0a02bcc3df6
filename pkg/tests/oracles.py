"""Independent brute-force oracles used to pin expected values in the tests.

Nothing here imports the implementation's Weyl machinery beyond the raw
diagram data; group elements are enumerated as permutation-free matrices
built from first principles, so oracle and implementation can disagree.
"""

from __future__ import annotations

from iboxes.roots import Diagram


def cartan_entry(diag: Diagram, i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if diag.adjacent(i, j) else 0


def reflect_vec(diag: Diagram, i: int, v: tuple[int, ...]) -> tuple[int, ...]:
    c = sum(cartan_entry(diag, i, j) * v[j - 1] for j in diag.nodes)
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def matrix_of(diag: Diagram, word: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    cols = []
    for j in diag.nodes:
        v = tuple(1 if t == j else 0 for t in diag.nodes)
        for i in reversed(word):
            v = reflect_vec(diag, i, v)
        cols.append(v)
    return tuple(cols)


def enumerate_weyl(diag: Diagram) -> dict[tuple, int]:
    """All Weyl group elements as matrices, mapped to their Coxeter length.

    Breadth-first search from the identity; the search depth at first
    discovery is the length, since each generator step changes length by 1.
    """
    identity = matrix_of(diag, ())
    lengths = {identity: 0}
    frontier = [identity]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for mat in frontier:
            for i in diag.nodes:
                new = tuple(reflect_vec(diag, i, col) for col in mat)
                if new not in lengths:
                    lengths[new] = depth
                    nxt.append(new)
        frontier = nxt
    return lengths


def apply(mat, v):
    n = len(mat)
    out = [0] * n
    for j, c in enumerate(v):
        for i in range(n):
            out[i] += c * mat[j][i]
    return tuple(out)
