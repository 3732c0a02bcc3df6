"""Seeds and mutation over exact integer Laurent polynomials.

A seed holds cluster variables indexed by an arbitrary finite key set K
(hashable labels), an exchange matrix over K x Kex, and optionally a
skew-symmetric K x K matrix Lambda compatible with it:

    sum_k lambda_{ik} b_{kj} = 2 delta_{ij}   for i in K, j in Kex.

Mutation at an exchangeable k replaces

    x_k  <-  ( prod_{b_{ik} > 0} x_i^{b_{ik}} + prod_{b_{ik} < 0} x_i^{-b_{ik}} ) / x_k

with exact Laurent division (failure raises, it is never truncated), flips
the matrix by the usual sign rule, and updates Lambda so compatibility is
preserved.  Everything returns new values; seeds are never modified.
"""

from __future__ import annotations

from dataclasses import dataclass

from iboxes.laurent import Laurent, NonLaurentDivisionError
from iboxes.quivers import ExchangeMatrix

__all__ = [
    "Seed",
    "NonLaurentDivisionError",
    "mutate_matrix",
    "mutate_seed",
    "mutate_lambda",
    "check_compatible",
    "positivity",
    "apply_sequence",
    "initial_seed",
]


def mutate_matrix(bmat: ExchangeMatrix, k) -> ExchangeMatrix:
    """Matrix mutation: negate through k, add sign-corrected products elsewhere."""
    if k not in set(bmat.cols):
        raise ValueError(f"vertex {k} is frozen")
    entries: dict = {}
    col_k = bmat.column(k)
    row_k = {j: bmat.entry(k, j) for j in bmat.cols}
    for i in bmat.rows:
        b_ik = col_k.get(i, 0)
        for j in bmat.cols:
            if i == k or j == k:
                v = -bmat.entry(i, j)
            else:
                b_kj = row_k.get(j, 0)
                v = bmat.entry(i, j)
                if b_ik * b_kj > 0:
                    v += (1 if b_ik > 0 else -1) * b_ik * b_kj
            if v:
                entries[(i, j)] = v
    return ExchangeMatrix(bmat.rows, bmat.cols, entries)


def mutate_lambda(lam: dict, bmat: ExchangeMatrix, k) -> dict:
    """Lambda mutation along the same direction."""
    rows = bmat.rows
    col_k = bmat.column(k)
    out: dict = {}
    for i in rows:
        for j in rows:
            if i == k and j != k:
                v = -lam.get((k, j), 0) + sum(
                    max(0, -col_k.get(t, 0)) * lam.get((t, j), 0) for t in rows
                )
            elif i != k and j == k:
                v = -lam.get((i, k), 0) + sum(
                    max(0, -col_k.get(t, 0)) * lam.get((i, t), 0) for t in rows
                )
            else:
                v = lam.get((i, j), 0)
            if v:
                out[(i, j)] = v
    return out


def check_compatible(lam: dict, bmat: ExchangeMatrix) -> bool:
    """sum_k lambda_{ik} b_{kj} = 2 delta_{ij} for every i in K, j in Kex."""
    for i in bmat.rows:
        for j in bmat.cols:
            total = sum(lam.get((i, t), 0) * bmat.entry(t, j) for t in bmat.rows)
            if total != (2 if i == j else 0):
                return False
    return True


@dataclass
class Seed:
    """Cluster variables keyed by the rows of the exchange matrix."""

    variables: dict
    bmat: ExchangeMatrix
    lam: dict | None = None

    def __post_init__(self) -> None:
        if set(self.variables) != set(self.bmat.rows):
            raise ValueError("variables must be keyed exactly by the matrix rows")
        if self.lam is not None and not check_compatible(self.lam, self.bmat):
            raise ValueError("Lambda is not compatible with the exchange matrix")

    @property
    def keys(self) -> tuple:
        return self.bmat.rows

    @property
    def exchangeable(self) -> tuple:
        return self.bmat.cols

    def variable(self, k) -> Laurent:
        return self.variables[k]

    def exchange_binomial(self, k) -> Laurent:
        """The two-term numerator of the exchange relation at k."""
        column = self.bmat.column(k)
        some = next(iter(self.variables.values()))
        pos = Laurent.one(some.nvars)
        neg = Laurent.one(some.nvars)
        for i, b in column.items():
            if b > 0:
                pos = pos * self.variables[i] ** b
            else:
                neg = neg * self.variables[i] ** (-b)
        return pos + neg

    def rename(self, mapping: dict) -> "Seed":
        f = lambda x: mapping.get(x, x)
        lam = None
        if self.lam is not None:
            lam = {(f(i), f(j)): v for (i, j), v in self.lam.items()}
        return Seed(
            {f(k): v for k, v in self.variables.items()},
            self.bmat.rename(mapping),
            lam,
        )

    def to_json(self, names: dict | None = None) -> dict:
        label = (lambda k: names[k]) if names else (lambda k: str(k))
        ordered = list(self.keys)
        var_names = [label(k) for k in ordered]
        return {
            "keys": var_names,
            "exchangeable": [label(k) for k in self.exchangeable],
            "variables": {label(k): self.variables[k].to_json() for k in ordered},
            "b": [
                [label(i), label(j), v]
                for (i, j), v in sorted(self.bmat.entries.items(), key=repr)
            ],
            **(
                {
                    "lambda": [
                        [label(i), label(j), v]
                        for (i, j), v in sorted(self.lam.items(), key=repr)
                    ]
                }
                if self.lam is not None
                else {}
            ),
        }


def initial_seed(bmat: ExchangeMatrix, lam: dict | None = None) -> Seed:
    """Fresh indeterminates, one per row, in row order."""
    keys = bmat.rows
    n = len(keys)
    variables = {k: Laurent.generator(n, pos) for pos, k in enumerate(keys)}
    return Seed(variables, bmat, lam)


def mutate_seed(seed: Seed, k) -> Seed:
    """One cluster mutation; exact, raises on frozen k or non-Laurent division."""
    if k not in set(seed.exchangeable):
        raise ValueError(f"vertex {k} is frozen")
    numerator = seed.exchange_binomial(k)
    new_var = numerator.exact_div(seed.variables[k])
    variables = dict(seed.variables)
    variables[k] = new_var
    lam = mutate_lambda(seed.lam, seed.bmat, k) if seed.lam is not None else None
    return Seed(variables, mutate_matrix(seed.bmat, k), lam)


def positivity(poly: Laurent) -> bool:
    return poly.is_positive()


def apply_sequence(seed: Seed, ks) -> Seed:
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed
