"""Reference backend for the R-matrix integer invariants in affine type A.

Between the fundamental classes V(i)_{(-q)^p} of A_n^(1), the normalized
R-matrix denominator vanishes exactly at the parameter ratios (-q)^e with

    e in { |i-j| + 2s : 1 <= s <= min(i, j, n+1-i, n+1-j) },

and everything else here is an integer shadow of that list:

    de(x, y)          number of exponents hit by the level difference,
                      counted in both directions,
    dual shift        D(i, p) = (n+1-i, p + n+1),
    Lambda(x, y)      alternating sum over dual shifts with the sign
                      (-1)^(k + [k<0]),
    Lambda_inf(x, y)  same with sign (-1)^k,
    E-vectors         formal sums of fundamentals with the pairing
                      (E(x), E(y)) = -Lambda_inf(x, y), extended
                      bi-additively, plus the honest integer function
                      (i, p) -> Lambda_inf(M, V(i, p)) on a level window.

The backend is keyed by affine type; only A_n^(1) ships, and every operation
raises on other types.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from iboxes.chains import Chain
from iboxes.sequences import AdmissibleSequence
from iboxes.tsystems import BoxSeed, cuspidal_positions, seed_from_chain


class BackendTypeError(ValueError):
    """The invariant backend only covers A_n^(1)."""


def _require_type_a(seq: AdmissibleSequence) -> int:
    tag = seq.datum.affine_tag
    if not (tag.startswith("A") and tag.endswith("(1)")):
        raise BackendTypeError("backend supports A_n^(1) only")
    return seq.datum.diagram.rank


@dataclass(frozen=True, order=True)
class FundIndex:
    """A fundamental class of A_n^(1): node i in [1, n] and integer level p."""

    i: int
    p: int


def denom_exponents(n: int, i: int, j: int) -> tuple[int, ...]:
    """Zeros of the denominator between nodes i and j, as (-q)-exponents."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"nodes must lie in [1,{n}]")
    top = min(i, j, n + 1 - i, n + 1 - j)
    return tuple(abs(i - j) + 2 * s for s in range(1, top + 1))


def de_fund(n: int, x: FundIndex, y: FundIndex) -> int:
    """Pole count of the composed R-matrices: symmetric, nonnegative."""
    exponents = denom_exponents(n, x.i, y.i)
    delta = y.p - x.p
    return exponents.count(delta) + exponents.count(-delta)


def dual_shift(n: int, x: FundIndex, k: int = 1) -> FundIndex:
    """k-th dual: star the node if k is odd, raise the level by k (n+1)."""
    node = x.i if k % 2 == 0 else n + 1 - x.i
    return FundIndex(node, x.p + k * (n + 1))


def _k_range(n: int, x: FundIndex, y: FundIndex) -> range:
    # de(x, D^k y) = 0 once |y.p + k(n+1) - x.p| exceeds every exponent (<= n+1)
    reach = (abs(y.p - x.p) + n + 1) // (n + 1) + 1
    return range(-reach, reach + 1)


# both sums only depend on the nodes and the level difference
@lru_cache(maxsize=None)
def _lambda_sums(n: int, i: int, j: int, dp: int) -> tuple[int, int]:
    x = FundIndex(i, 0)
    y = FundIndex(j, dp)
    lam = lam_inf = 0
    for k in _k_range(n, x, y):
        term = de_fund(n, x, dual_shift(n, y, k))
        parity = -1 if k % 2 else 1
        lam += (-parity if k < 0 else parity) * term
        lam_inf += parity * term
    return lam, lam_inf


def lambda_fund(n: int, x: FundIndex, y: FundIndex) -> int:
    """Lambda(x, y) = sum_k (-1)^(k + [k<0]) de(x, D^k y)."""
    return _lambda_sums(n, x.i, y.i, y.p - x.p)[0]


def lambda_inf_fund(n: int, x: FundIndex, y: FundIndex) -> int:
    """Lambda_inf(x, y) = sum_k (-1)^k de(x, D^k y)."""
    return _lambda_sums(n, x.i, y.i, y.p - x.p)[1]


# ---------------------------------------------------------------------------
# E-vectors


@dataclass(frozen=True)
class EVector:
    """A formal Z-combination of fundamental classes (the head's factors)."""

    n: int
    factors: tuple[tuple[FundIndex, int], ...]  # (fundamental, multiplicity)

    def items(self) -> tuple[tuple[FundIndex, int], ...]:
        return self.factors

    def __add__(self, other: "EVector") -> "EVector":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        acc: dict[FundIndex, int] = dict(self.factors)
        for f, c in other.factors:
            acc[f] = acc.get(f, 0) + c
        return EVector(self.n, _normalize(acc))

    def scale(self, c: int) -> "EVector":
        return EVector(self.n, _normalize({f: c * v for f, v in self.factors}))

    def is_zero(self) -> bool:
        return not self.factors

    def function(self, lo: int, hi: int) -> dict[FundIndex, int]:
        """The integer function (i, p) -> Lambda_inf(M, V(i, p)) on a window.

        The function determines the vector globally: it flips sign under the
        dual shift, so any window of n+1 consecutive levels meets every dual
        orbit exactly once.
        """
        out: dict[FundIndex, int] = {}
        for i in range(1, self.n + 1):
            for p in range(lo, hi + 1):
                v = sum(
                    c * lambda_inf_fund(self.n, f, FundIndex(i, p))
                    for f, c in self.factors
                )
                if v:
                    out[FundIndex(i, p)] = v
        return out


def _normalize(acc: dict[FundIndex, int]) -> tuple[tuple[FundIndex, int], ...]:
    return tuple(sorted((f, c) for f, c in acc.items() if c))


def e_vector(n: int, factors) -> EVector:
    """E of the head of a tensor of fundamentals: the sum of the factors."""
    acc: dict[FundIndex, int] = {}
    for f in factors:
        acc[f] = acc.get(f, 0) + 1
    return EVector(n, _normalize(acc))


def bilinear(e1: EVector, e2: EVector) -> int:
    """(E, E') = -Lambda_inf pairing, extended bi-additively."""
    if e1.n != e2.n:
        raise ValueError("rank mismatch")
    return -sum(
        c1 * c2 * lambda_inf_fund(e1.n, f1, f2)
        for f1, c1 in e1.factors
        for f2, c2 in e2.factors
    )


# ---------------------------------------------------------------------------
# sequence-level checks


def fundamental_of(seq: AdmissibleSequence, k: int) -> FundIndex:
    _require_type_a(seq)
    return FundIndex(seq.i(k), seq.p(k))


def root_module_check(n: int, x: FundIndex) -> bool:
    """de(x, D^k x) = [k = +-1] for |k| <= n+2."""
    return all(
        de_fund(n, x, dual_shift(n, x, k)) == (1 if k in (-1, 1) else 0)
        for k in range(-(n + 2), n + 3)
    )


@dataclass
class CheckReport:
    ok: bool
    lines: list[str]

    def __str__(self) -> str:
        return "\n".join(self.lines + [f"{'PASS' if self.ok else 'FAIL'}"])


def cuspidal_de_checks(seq: AdmissibleSequence, lo: int, hi: int) -> CheckReport:
    """Distance laws of the cuspidal classes along the sequence.

    Neighbors of equal color meet in exactly one pole; classes at index
    distance >= ell meet iff the distance is exactly ell; higher duals of a
    later class never meet an earlier one.
    """
    n = _require_type_a(seq)
    ell = seq.datum.ell
    lines, ok = [], True

    def check(cond: bool, text: str) -> None:
        nonlocal ok
        lines.append(("ok  " if cond else "BAD ") + text)
        ok = ok and cond

    for a in range(lo, hi + 1):
        sa = fundamental_of(seq, a)
        check(
            de_fund(n, fundamental_of(seq, seq.idx_plus(a)), sa) == 1,
            f"de(S_{seq.idx_plus(a)}, S_{a}) = 1",
        )
    for a in range(lo, hi + 1):
        for dist in range(ell, 2 * ell + 1):
            val = de_fund(n, fundamental_of(seq, a), fundamental_of(seq, a + dist))
            check(val == (1 if dist == ell else 0), f"de(S_{a}, S_{a + dist}) at distance {dist}")
    for a in range(lo, hi + 1):
        for b in range(a + 1, min(a + ell, hi) + 1):
            for m in range(1, 3):
                val = de_fund(n, dual_shift(n, fundamental_of(seq, b), m), fundamental_of(seq, a))
                check(val == 0, f"de(D^{m} S_{b}, S_{a}) = 0")
    return CheckReport(ok, lines)


def lambda_boxes(seq: AdmissibleSequence, box1, box2) -> int:
    """Lambda between two boxes with disjoint index ranges (where it equals
    the bi-additive Lambda_inf); overlapping boxes are unsupported."""
    n = _require_type_a(seq)
    if not (box1.b < box2.a or box2.b < box1.a):
        raise ValueError("unsupported: boxes overlap, Lambda is not bi-additive there")
    total = 0
    for s in cuspidal_positions(seq, box1):
        for t in cuspidal_positions(seq, box2):
            total += lambda_inf_fund(n, fundamental_of(seq, s), fundamental_of(seq, t))
    return total


def e_vector_of_box(seq: AdmissibleSequence, box) -> EVector:
    n = _require_type_a(seq)
    return e_vector(n, [fundamental_of(seq, t) for t in cuspidal_positions(seq, box)])


def de_lambda_table(n: int, lo: int, hi: int) -> list[dict]:
    """Rows (x, y, de, Lambda, Lambda_inf) over a level window, for snapshots."""
    rows = []
    pts = [FundIndex(i, p) for i in range(1, n + 1) for p in range(lo, hi + 1)]
    for x in pts:
        for y in pts:
            rows.append(
                {
                    "i": x.i,
                    "p": x.p,
                    "j": y.i,
                    "r": y.p,
                    "de": de_fund(n, x, y),
                    "lambda": lambda_fund(n, x, y),
                    "lambda_inf": lambda_inf_fund(n, x, y),
                }
            )
    return rows


def write_table_csv(fh, n: int, lo: int, hi: int) -> None:
    """CSV dump of :func:`de_lambda_table` (a regression-snapshot format)."""
    fh.write("i,p,j,r,de,lambda,lambda_inf\n")
    for row in de_lambda_table(n, lo, hi):
        fh.write(
            f"{row['i']},{row['p']},{row['j']},{row['r']},"
            f"{row['de']},{row['lambda']},{row['lambda_inf']}\n"
        )


def eb_check(seq: AdmissibleSequence, chain: Chain, box_seed: BoxSeed | None = None) -> bool:
    """sum_i E(M_i) b_{i,k} = 0 as integer functions, for every exchangeable k.

    Checked on a window that spans all factor levels plus one dual period,
    which contains a full fundamental domain of the dual shift.
    """
    n = _require_type_a(seq)
    bs = box_seed if box_seed is not None else seed_from_chain(seq, chain)
    vectors = {box: e_vector_of_box(seq, box) for box in bs.boxes}
    levels = [seq.p(t) for box in bs.boxes for t in cuspidal_positions(seq, box)]
    lo, hi = min(levels) - (n + 1), max(levels) + (n + 1)
    for k in bs.seed.exchangeable:
        column = bs.seed.bmat.column(k)
        total = EVector(n, ())
        for box, b in column.items():
            total = total + vectors[box].scale(b)
        if total.function(lo, hi):
            return False
    return True
