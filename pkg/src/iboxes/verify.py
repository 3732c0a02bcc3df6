"""Property suites: exact replays of the worked data plus randomized laws.

Each suite returns a :class:`SuiteResult` with one line per check; the CLI
prints them and exits nonzero on any failure, and the acceptance test module
drives the same functions with pinned budgets.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from iboxes.chains import (
    Chain,
    IBox,
    apply_moves,
    canonical_chain,
    classify_move,
    expand_code,
    movable_positions,
    t_path,
)
from iboxes.cluster import mutate_seed
from iboxes.invariants import (
    FundIndex,
    bilinear,
    de_fund,
    dual_shift,
    e_vector,
    eb_check,
    fundamental_of,
    lambda_fund,
    root_module_check,
)
from iboxes.qdata import QDatum, adapted_word, default_q_datum, example_height
from iboxes.roots import beta_sequence, folded_datum, positive_roots
from iboxes.sequences import (
    AdmissibleSequence,
    canonical_sequence,
    from_q_datum,
    staircase_sequence,
    to_q_datum,
)
from iboxes.quivers import check_gls_eq_hl, hl_quiver, psi_quiver
from iboxes.tsystems import canonical_box_seed, seed_from_chain, transport, verify_box_move_mutation, vinout_check


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def check(self, cond: bool, text: str) -> None:
        self.lines.append(("ok   " if cond else "FAIL ") + text)
        self.ok = self.ok and cond

    def __str__(self) -> str:
        head = f"[{'PASS' if self.ok else 'FAIL'}] {self.name} ({self.elapsed:.2f}s)"
        return "\n".join([head] + ["  " + line for line in self.lines])


def _worked_example_sequence() -> AdmissibleSequence:
    # colors (3,2,3,1,2,3) on indices -2..3
    return from_q_datum(QDatum(folded_datum("A3"), {1: 0, 2: 1, 3: 2}), (1, 2, 3, 1, 2, 1))


def _random_chain(rng: random.Random, seq: AdmissibleSequence, lo: int, hi: int) -> Chain:
    code = tuple(rng.choice("LR") for _ in range(hi - lo))
    base = hi - sum(1 for c in code if c == "R")
    return expand_code(seq, base, code)


# ---------------------------------------------------------------------------
# suites


def suite_example_replay(**_) -> SuiteResult:
    """The four-chain walk of the worked A3 example, with exact box lists."""
    result = SuiteResult("example-replay")
    seq = _worked_example_sequence()
    chain = expand_code(seq, 0, ("L", "L"))
    result.check(
        [(b.a, b.b) for b in chain.boxes] == [(0, 0), (-1, -1), (-2, 0)],
        "initial chain (0,LL) lists ([0],[-1],[-2,0])",
    )
    expected = [
        (1, -1, "RL", [(-1, -1), (0, 0), (-2, 0)], "transposition"),
        (2, -1, "LR", [(-1, -1), (-2, -2), (-2, 0)], "tsystem"),
        (1, -2, "RR", [(-2, -2), (-1, -1), (-2, 0)], "transposition"),
    ]
    for s, base, code, boxes, kind in expected:
        result.check(classify_move(chain, s).kind == kind, f"move at {s} is a {kind}")
        chain = apply_moves(chain, [s])
        result.check(
            (chain.base, "".join(chain.code)) == (base, code)
            and [(b.a, b.b) for b in chain.boxes] == boxes,
            f"reached ({base},{code}) with boxes {boxes}",
        )
    return result


_HL_GLS_TYPES = ("A3", "A4", "B2", "C3", "D4")


def suite_hl_eq_gls(types=_HL_GLS_TYPES, window: tuple[int, int] | None = None, **_) -> SuiteResult:
    """Arrow-set equality of the block and lattice quivers on >= 3 ell indices."""
    result = SuiteResult("hl-eq-gls")
    for tag in types:
        seq = staircase_sequence(tag)
        if window is None:
            half = (3 * seq.datum.ell + 1) // 2
            lo, hi = -half, half + 1
        else:
            lo, hi = window
        result.check(check_gls_eq_hl(seq, lo, hi), f"{tag} on [{lo},{hi}]")
    return result


# arrows read off the repetition-quiver figure panels, per affine type
_PSI_FIXTURES = {
    "A3": [
        ((1, -4), (2, -3)), ((1, -2), (2, -1)), ((1, 0), (2, 1)), ((1, 2), (2, 3)),
        ((2, -3), (1, -2)), ((2, -3), (3, -2)), ((2, -1), (1, 0)), ((2, -1), (3, 0)),
        ((2, 1), (1, 2)), ((2, 1), (3, 2)),
        ((3, -4), (2, -3)), ((3, -2), (2, -1)), ((3, 0), (2, 1)), ((3, 2), (2, 3)),
    ],
    "B2": [
        ((1, -7), (2, -6)), ((1, -3), (2, -2)),
        ((2, -8), (1, -7)), ((2, -6), (3, -5)), ((2, -4), (1, -3)),
        ((2, -2), (3, -1)), ((2, 0), (1, 1)),
        ((3, -5), (2, -4)), ((3, -1), (2, 0)),
    ],
    "C3": [
        ((1, -6), (2, -5)), ((1, -4), (2, -3)), ((1, -2), (2, -1)), ((1, 0), (2, 1)),
        ((2, -5), (1, -4)), ((2, -5), (3, -4)), ((2, -3), (1, -2)), ((2, -3), (4, -2)),
        ((2, -1), (1, 0)), ((2, -1), (3, 0)), ((2, 1), (1, 2)), ((2, 1), (4, 2)),
        ((3, -4), (2, -3)), ((3, 0), (2, 1)),
        ((4, -6), (2, -5)), ((4, -2), (2, -1)), ((4, 2), (2, 3)),
    ],
    "D4": [
        ((1, -6), (2, -5)), ((1, -4), (2, -3)), ((1, -2), (2, -1)), ((1, 0), (2, 1)),
        ((2, -5), (1, -4)), ((2, -5), (3, -4)), ((2, -5), (4, -4)),
        ((2, -3), (1, -2)), ((2, -3), (3, -2)), ((2, -3), (4, -2)),
        ((2, -1), (1, 0)), ((2, -1), (3, 0)), ((2, -1), (4, 0)),
        ((3, -6), (2, -5)), ((3, -4), (2, -3)), ((3, -2), (2, -1)), ((3, 0), (2, 1)),
        ((4, -6), (2, -5)), ((4, -4), (2, -3)), ((4, -2), (2, -1)), ((4, 0), (2, 1)),
    ],
}

# arrows read off the half-lattice figure panels (levels < 1)
_HL_FIXTURES = {
    "A3": [
        ((1, -6), (2, -5)), ((1, -4), (1, -6)), ((1, -4), (2, -3)),
        ((2, -5), (1, -4)), ((2, -5), (3, -4)), ((2, -5), (2, -7)),
        ((2, -1), (1, 0)), ((2, -1), (3, 0)), ((2, -1), (2, -3)),
        ((3, -4), (3, -6)), ((3, -4), (2, -3)), ((3, 0), (3, -2)),
    ],
    "B2": [
        ((1, -7), (2, -6)), ((1, -3), (1, -7)),
        ((2, -10), (1, -7)), ((2, -8), (2, -10)), ((2, -8), (3, -5)),
        ((2, -6), (1, -3)), ((2, -6), (2, -8)), ((2, -4), (2, -6)),
        ((2, -4), (3, -1)), ((3, -9), (2, -8)), ((3, -5), (2, -4)),
        ((3, -5), (3, -9)),
    ],
    "C3": [
        ((1, -10), (2, -9)), ((1, -8), (1, -10)), ((2, -9), (1, -8)),
        ((2, -9), (4, -6)), ((2, -7), (3, -4)), ((3, -8), (2, -7)),
        ((3, -4), (3, -8)), ((4, -6), (2, -5)), ((4, -6), (4, -10)),
        ((2, -5), (1, -4)), ((2, -3), (3, 0)), ((4, -2), (2, -1)),
    ],
    "D4": [
        ((2, -7), (1, -6)), ((2, -7), (3, -6)), ((2, -7), (4, -6)),
        ((1, -4), (1, -6)), ((1, -4), (2, -3)), ((3, -4), (3, -6)),
        ((4, -4), (4, -6)), ((4, -4), (2, -3)), ((2, -1), (2, -3)),
        ((2, -1), (1, 0)), ((2, -1), (3, 0)), ((2, -1), (4, 0)),
    ],
}


def suite_figures(**_) -> SuiteResult:
    """Every figure-panel arrow appears in the generated quivers."""
    result = SuiteResult("figures")
    for tag, fixtures in _PSI_FIXTURES.items():
        q = default_q_datum(tag)
        quiver = psi_quiver(q, -12, 6)
        arrows = set(quiver.arrows)
        missing = [a for a in fixtures if a not in arrows]
        result.check(not missing, f"{tag} lattice panel ({len(fixtures)} arrows)" + (f" missing {missing}" if missing else ""))
    for tag, fixtures in _HL_FIXTURES.items():
        datum = folded_datum(tag)
        verts = {v for arrow in fixtures for v in arrow}
        quiver = hl_quiver(datum, verts)
        arrows = set(quiver.arrows)
        missing = [a for a in fixtures if a not in arrows]
        result.check(not missing, f"{tag} half-lattice panel ({len(fixtures)} arrows)" + (f" missing {missing}" if missing else ""))
    return result


_MOVE_TYPES = ("A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "A5(2)", "D4(3)")


def suite_boxmove_mutation(budget: int = 200, max_window: int = 20, rng_seed: int = 2024, **_) -> SuiteResult:
    """Randomized chains: every T-system move equals its predicted exchange."""
    result = SuiteResult("boxmove-mutation")
    rng = random.Random(rng_seed)
    sequences = {tag: canonical_sequence(tag) for tag in _MOVE_TYPES}
    checked = instances = 0
    for _ in range(budget):
        tag = rng.choice(_MOVE_TYPES)
        seq = sequences[tag]
        length = rng.randint(2, max_window)
        lo = rng.randint(-12, 6)
        chain = _random_chain(rng, seq, lo, lo + length - 1)
        instances += 1
        tsystem_moves = [s for s, m in movable_positions(chain) if m.is_tsystem]
        if tsystem_moves:
            bs = seed_from_chain(seq, chain)
            for s in tsystem_moves:
                report = verify_box_move_mutation(seq, chain, s, box_seed=bs)
                checked += 1
                if not report.ok:
                    result.check(False, f"{tag} chain {chain.code_string()} move {s}:\n{report}")
    result.check(instances >= budget, f"{instances} chain instances drawn")
    result.check(checked > 0, f"{checked} T-system moves verified exactly")
    return result


def suite_laurent_positivity(budget: int = 40, depth: int = 8, max_window: int = 12, rng_seed: int = 11, **_) -> SuiteResult:
    """Mixed random walks of moves and mutations keep variables positive Laurent."""
    result = SuiteResult("laurent-positivity")
    rng = random.Random(rng_seed)
    bad = 0
    for _ in range(budget):
        tag = rng.choice(("A2", "A3", "A4", "B2", "C3", "D4"))
        seq = canonical_sequence(tag)
        lo = rng.randint(-8, 0)
        hi = lo + rng.randint(1, max_window - 1)
        bs = canonical_box_seed(seq, lo, hi)
        steps = 0
        while steps < depth:
            tsystem_moves = [s for s, m in movable_positions(bs.chain) if m.is_tsystem]
            do_move = tsystem_moves and rng.random() < 0.5
            if do_move:
                bs = transport(bs, [rng.choice(tsystem_moves)])
            else:
                keys = list(bs.seed.exchangeable)
                if not keys:
                    break
                bs.seed = mutate_seed(bs.seed, rng.choice(keys))
            steps += 1
            if not all(v.is_positive() for v in bs.seed.variables.values()):
                bad += 1
                result.check(False, f"{tag} window [{lo},{hi}] lost positivity")
                break
    result.check(bad == 0, f"{budget} random walks of depth <= {depth} stayed positive Laurent")
    return result


def suite_vinout(types=("A3", "A4", "B2", "B3", "C3", "D4", "G2"), window: tuple[int, int] = (-9, 9), **_) -> SuiteResult:
    """Initial-seed columns match the incoming/outgoing index law exactly."""
    result = SuiteResult("vinout")
    lo, hi = window
    for tag in types:
        seq = canonical_sequence(tag)
        cols = [s for s in range(lo, hi + 1) if seq.idx_minus(s) >= lo]
        ok = all(vinout_check(seq, lo, hi, s) for s in cols)
        result.check(ok, f"{tag} on [{lo},{hi}] ({len(cols)} columns)")
    return result


def suite_invariants_a(max_rank: int = 5, **_) -> SuiteResult:
    """Type A backend laws on level windows of width 4(n+1)."""
    result = SuiteResult("invariants-a")
    for n in range(1, max_rank + 1):
        width = 4 * (n + 1)
        pts = [FundIndex(i, p) for i in range(1, n + 1) for p in range(-width // 2, width // 2 + 1)]
        result.check(
            all(root_module_check(n, x) for x in pts),
            f"n={n}: all fundamentals are root modules",
        )
        result.check(
            all(
                lambda_fund(n, x, y) + lambda_fund(n, y, x) == 2 * de_fund(n, x, y)
                for x in pts
                for y in pts
            ),
            f"n={n}: Lambda(x,y) + Lambda(y,x) = 2 de(x,y) on the window",
        )
    for tag in ("A2", "A3", "A4", "A5"):
        seq = canonical_sequence(tag)
        n, ell = seq.datum.diagram.rank, seq.datum.ell
        ok_neighbors = all(
            de_fund(n, fundamental_of(seq, seq.idx_plus(a)), fundamental_of(seq, a)) == 1
            for a in range(-ell, ell + 1)
        )
        result.check(ok_neighbors, f"{tag}: de(S_a+, S_a) = 1")
        ok_far = all(
            de_fund(n, fundamental_of(seq, a), fundamental_of(seq, a + dist))
            == (1 if dist == ell else 0)
            for a in range(-ell, ell + 1)
            for dist in range(ell, 2 * ell + 1)
        )
        result.check(ok_far, f"{tag}: de(S_a, S_b) = [|a-b| = ell] for ell <= |a-b| <= 2 ell")
    return result


def suite_eb(budget: int = 25, max_window: int = 24, rng_seed: int = 5, **_) -> SuiteResult:
    """E . B = 0 for seeds of random type A chains."""
    result = SuiteResult("eb")
    rng = random.Random(rng_seed)
    seq3 = _worked_example_sequence()
    result.check(eb_check(seq3, expand_code(seq3, 0, ("L", "L"))), "worked A3 chain")
    for _ in range(budget):
        tag = rng.choice(("A2", "A3", "A4", "A5"))
        seq = canonical_sequence(tag)
        length = rng.randint(1, max_window)
        lo = rng.randint(-12, 0)
        chain = _random_chain(rng, seq, lo, lo + length - 1)
        if not eb_check(seq, chain):
            result.check(False, f"{tag} chain {chain.code_string()}")
    result.check(True, f"{budget} random chains with windows <= {max_window}")
    return result


def suite_gram(**_) -> SuiteResult:
    """The E-pairing Gram matrix equals the root Gram matrix on the base word."""
    result = SuiteResult("gram")
    seq = _worked_example_sequence()
    diag = seq.datum.diagram
    betas = beta_sequence(diag, seq.period_i)

    def pairing(u, v):
        return sum(
            u[a - 1] * v[b - 1] * diag.cartan(a, b) for a in diag.nodes for b in diag.nodes
        )

    ok = True
    for j in range(1, seq.datum.ell + 1):
        for k in range(1, seq.datum.ell + 1):
            lhs = bilinear(
                e_vector(3, [fundamental_of(seq, j)]),
                e_vector(3, [fundamental_of(seq, k)]),
            )
            if lhs != pairing(betas[j - 1], betas[k - 1]):
                ok = False
                result.check(False, f"entry ({j},{k}): {lhs} != root pairing")
    result.check(ok, "6 x 6 Gram matrices agree entrywise")
    return result


def suite_transport(budget: int = 50, max_range: int = 16, rng_seed: int = 13, **_) -> SuiteResult:
    """Path independence: direct seeds equal path-composed transported seeds."""
    result = SuiteResult("transport")
    rng = random.Random(rng_seed)
    bad = 0
    for _ in range(budget):
        tag = rng.choice(("A2", "A3", "A4", "B2", "C3"))
        seq = canonical_sequence(tag)
        length = rng.randint(2, max_range)
        lo = rng.randint(-10, 2)
        hi = lo + length - 1
        chain1 = _random_chain(rng, seq, lo, hi)
        chain2 = _random_chain(rng, seq, lo, hi)
        direct = seed_from_chain(seq, chain2)
        via = transport(seed_from_chain(seq, chain1), t_path(chain1, chain2))
        same = (
            via.seed.variables == direct.seed.variables
            and via.seed.bmat == direct.seed.bmat
            and set(via.boxes) == set(direct.boxes)
        )
        if not same:
            bad += 1
            result.check(False, f"{tag} {chain1.code_string()} -> {chain2.code_string()}")
    result.check(bad == 0, f"{budget} random chain pairs with range <= {max_range}")
    return result


_RHO_TAGS = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "A5(2)", "D4(2)", "E6(2)", "D4(3)")


def suite_rho_roundtrip(types=_RHO_TAGS, **_) -> SuiteResult:
    """Sequence <-> (heights, word) round trip, and the window bijection onto
    positive roots at dual level zero."""
    from iboxes.qdata import HatIndex, in_hat_lattice, phi_q, phi_q_inv

    result = SuiteResult("rho-roundtrip")
    for tag in types:
        datum = folded_datum(tag)
        for heights in (default_q_datum(tag).xi, example_height(datum)):
            q = QDatum(datum, heights)
            word = adapted_word(q)
            seq = from_q_datum(q, word)
            q2, word2 = to_q_datum(seq)
            result.check(q2 == q and word2 == word, f"{tag} xi={tuple(heights.values())} round trip")
        q = default_q_datum(tag)
        word = adapted_word(q)
        period = datum.ord_sigma * datum.h_dual
        images = set()
        ok = True
        for i in datum.nodes:
            p = q.xi[i]
            while p < q.xi[datum.star[i]] + period:
                if in_hat_lattice(q, i, p):
                    beta, m = phi_q(q, word, HatIndex(i, p))
                    ok = ok and m == 0 and phi_q_inv(q, word, beta, 0) == HatIndex(i, p)
                    images.add(beta)
                p += 1
        ok = ok and images == set(positive_roots(datum.diagram))
        result.check(ok, f"{tag} window maps onto the positive roots bijectively")
    return result


SUITES = {
    "example-replay": suite_example_replay,
    "hl-eq-gls": suite_hl_eq_gls,
    "figures": suite_figures,
    "boxmove-mutation": suite_boxmove_mutation,
    "laurent-positivity": suite_laurent_positivity,
    "vinout": suite_vinout,
    "invariants-a": suite_invariants_a,
    "eb": suite_eb,
    "gram": suite_gram,
    "transport": suite_transport,
    "rho-roundtrip": suite_rho_roundtrip,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    start = time.perf_counter()
    result = SUITES[name](**kwargs)
    result.elapsed = time.perf_counter() - start
    return result


def run_all(**kwargs) -> list[SuiteResult]:
    return [run_suite(name, **kwargs) for name in SUITES]
