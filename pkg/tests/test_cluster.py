import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iboxes.cluster import (
    Seed,
    apply_sequence,
    check_compatible,
    initial_seed,
    mutate_matrix,
    mutate_lambda,
    mutate_seed,
    positivity,
)
from iboxes.laurent import Laurent
from iboxes.quivers import ExchangeMatrix


def rank2(b12):
    return ExchangeMatrix((1, 2), (1, 2), {(1, 2): b12, (2, 1): -b12})


def test_mutate_matrix_rank2():
    b = rank2(1)
    m = mutate_matrix(b, 1)
    assert m.entry(1, 2) == -1 and m.entry(2, 1) == 1
    assert mutate_matrix(m, 1) == b


def test_mutate_matrix_window_example():
    # the [-2,0] window column: +1 at -1, -1 at -2; no two-paths through 0
    b = ExchangeMatrix((-2, -1, 0), (0,), {(-1, 0): 1, (-2, 0): -1})
    m = mutate_matrix(b, 0)
    assert m.column(0) == {-1: -1, -2: 1}
    assert mutate_matrix(m, 0) == b


def test_mutate_matrix_secondary_terms():
    b = ExchangeMatrix(
        (1, 2, 3), (1, 2, 3), {(1, 2): 1, (2, 1): -1, (2, 3): 1, (3, 2): -1}
    )
    m = mutate_matrix(b, 2)
    # path 1 -> 2 -> 3 creates the composite arrow 1 -> 3
    assert m.entry(1, 3) == 1 and m.entry(3, 1) == -1
    assert m.entry(1, 2) == -1 and m.entry(2, 3) == -1
    assert mutate_matrix(m, 2) == b


def test_mutate_frozen_raises():
    b = ExchangeMatrix((1, 2), (2,), {(1, 2): 1})
    with pytest.raises(ValueError, match="frozen"):
        mutate_matrix(b, 1)
    with pytest.raises(ValueError, match="frozen"):
        mutate_seed(initial_seed(b), 1)


def test_mutate_seed_window_example():
    b = ExchangeMatrix((-2, -1, 0), (0,), {(-1, 0): 1, (-2, 0): -1})
    seed = initial_seed(b)
    mutated = mutate_seed(seed, 0)
    x2, x1, x0 = (seed.variables[k] for k in (-2, -1, 0))
    assert mutated.variables[0] == (x1 + x2).exact_div(x0)
    back = mutate_seed(mutated, 0)
    assert back.variables == seed.variables
    assert back.bmat == seed.bmat


def test_a2_pentagon():
    seed = initial_seed(rank2(1))
    out = apply_sequence(seed, [1, 2, 1, 2, 1])
    x1, x2 = seed.variables[1], seed.variables[2]
    assert out.variables[1] == x2
    assert out.variables[2] == x1


def test_apply_sequence_empty():
    seed = initial_seed(rank2(1))
    assert apply_sequence(seed, []) is seed


def test_check_compatible_rank2():
    b = rank2(2)
    good = {(1, 2): -1, (2, 1): 1}
    bad = {(1, 2): 1, (2, 1): -1}
    assert check_compatible(good, b)
    assert not check_compatible(bad, b)


def test_seed_rejects_incompatible_lambda():
    with pytest.raises(ValueError, match="compatible"):
        initial_seed(rank2(2), {(1, 2): 1, (2, 1): -1})


def test_lambda_mutation_preserves_compatibility():
    b = rank2(2)
    lam = {(1, 2): -1, (2, 1): 1}
    seed = initial_seed(b, lam)
    for path in ([1], [2], [1, 2], [2, 1, 1], [1, 2, 1, 2]):
        cur = seed
        for k in path:
            cur = mutate_seed(cur, k)
            assert check_compatible(cur.lam, cur.bmat)


def test_positivity_of_exchange():
    b = ExchangeMatrix((-2, -1, 0), (0,), {(-1, 0): 1, (-2, 0): -1})
    mutated = mutate_seed(initial_seed(b), 0)
    assert positivity(mutated.variables[0])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_laurent_phenomenon_randomized(seed_int):
    """Random mutation runs stay Laurent with positive coefficients.

    Uses an acyclic rank-4 quiver with two frozen rows; exactness of every
    division is implicitly asserted (division raises otherwise).
    """
    rng = random.Random(seed_int)
    entries = {}
    keys = (1, 2, 3, 4, "f1", "f2")
    cols = (1, 2, 3, 4)
    for i, j in [(1, 2), (2, 3), (3, 4), ("f1", 1), ("f2", 3)]:
        entries[(i, j)] = 1
        if j in cols and i in cols:
            entries[(j, i)] = -1
    seed = initial_seed(ExchangeMatrix(keys, cols, entries))
    for _ in range(8):
        k = rng.choice(cols)
        seed = mutate_seed(seed, k)
        assert all(v.is_positive() for v in seed.variables.values())


def test_seed_rename():
    b = rank2(1)
    seed = initial_seed(b).rename({1: "a", 2: "b"})
    assert set(seed.keys) == {"a", "b"}
    mutated = mutate_seed(seed, "a")
    assert mutated.variables["b"] == seed.variables["b"]
