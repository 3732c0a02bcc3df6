import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iboxes.chains import (
    Chain,
    IBox,
    apply_moves,
    box_move,
    boxes_commute,
    canonical_chain,
    classify_move,
    color_multiplicity,
    expand_code,
    frozen_indices,
    is_ibox,
    member_index,
    movable,
    movable_positions,
    normalization_moves,
    parse_chain,
    t_path,
)
from iboxes.qdata import QDatum
from iboxes.roots import folded_datum
from iboxes.sequences import canonical_sequence, from_q_datum


def hhat():
    """Ambient sequence with colors (3,2,3,1,2,3) on indices -2..3."""
    return from_q_datum(QDatum(folded_datum("A3"), {1: 0, 2: 1, 3: 2}), (1, 2, 3, 1, 2, 1))


def boxes_of(chain):
    return [(b.a, b.b) for b in chain.boxes]


def test_worked_example_chain_1():
    chain = expand_code(hhat(), 0, ("L", "L"))
    assert boxes_of(chain) == [(0, 0), (-1, -1), (-2, 0)]
    assert chain.envelopes == ((0, 0), (-1, 0), (-2, 0))


def test_worked_example_chain_2():
    chain = expand_code(hhat(), -1, ("R", "L"))
    assert boxes_of(chain) == [(-1, -1), (0, 0), (-2, 0)]


def test_single_box_chain():
    chain = expand_code(hhat(), 5, ())
    assert boxes_of(chain) == [(5, 5)]
    assert chain.range == (5, 5)


def test_worked_example_move_sequence():
    seq = hhat()
    c1 = expand_code(seq, 0, ("L", "L"))

    c2 = box_move(c1, 1)
    assert (c2.base, c2.code) == (-1, ("R", "L"))
    assert boxes_of(c2) == [(-1, -1), (0, 0), (-2, 0)]
    assert classify_move(c1, 1).kind == "transposition"

    # the only movable position of c2 besides s=1 is s=2, a T-system move
    assert movable(c2, 2)
    assert classify_move(c2, 2).kind == "tsystem"
    assert classify_move(c2, 2).ibox == IBox(-2, 0)
    c3 = box_move(c2, 2)
    assert (c3.base, c3.code) == (-1, ("L", "R"))
    assert boxes_of(c3) == [(-1, -1), (-2, -2), (-2, 0)]

    c4 = box_move(c3, 1)
    assert (c4.base, c4.code) == (-2, ("R", "R"))
    assert boxes_of(c4) == [(-2, -2), (-1, -1), (-2, 0)]
    assert classify_move(c3, 1).kind == "transposition"


def test_box_move_is_involution():
    seq = hhat()
    for base, code in [(0, "LL"), (-1, "RL"), (-1, "LR"), (3, "LRLL")]:
        chain = expand_code(seq, base, tuple(code))
        for s in range(1, len(chain)):
            if movable(chain, s):
                assert box_move(box_move(chain, s), s) == chain


def test_commuting_criterion_examples():
    seq = hhat()
    assert boxes_commute(seq, IBox(0, 0), IBox(-2, 0))
    assert not boxes_commute(seq, IBox(-2, -2), IBox(0, 0))
    assert boxes_commute(seq, IBox(-1, -1), IBox(-1, -1))


def test_chain_boxes_pairwise_commute():
    seq = hhat()
    for base, code in [(0, "LL"), (-1, "RL"), (2, "LRLR"), (0, "RRLL")]:
        chain = expand_code(seq, base, tuple(code))
        for j in range(1, len(chain) + 1):
            for k in range(1, len(chain) + 1):
                assert boxes_commute(seq, chain.box(j), chain.box(k))


def test_is_ibox_and_multiplicity():
    seq = hhat()
    assert is_ibox(seq, -2, 0)
    assert not is_ibox(seq, -1, 0)
    assert color_multiplicity(seq, IBox(-2, 0)) == 2
    assert color_multiplicity(seq, IBox(-2, 3)) == 3
    assert color_multiplicity(seq, IBox(1, 1)) == 1


def test_frozen_indices_example():
    chain = expand_code(hhat(), 0, ("L", "L"))
    assert frozen_indices(chain) == frozenset({2, 3})
    assert member_index(chain, IBox(-1, -1)) == 2
    assert member_index(chain, IBox(-2, -2)) is None


def test_canonical_chain_is_all_L():
    seq = hhat()
    chain = canonical_chain(seq, -2, 0)
    assert chain.base == 0
    assert chain.code == ("L", "L")
    assert chain.box(1) == IBox(0, 0)


def test_t_path_worked_example():
    seq = hhat()
    c1 = expand_code(seq, 0, ("L", "L"))
    c4 = expand_code(seq, -2, ("R", "R"))
    path = t_path(c1, c4)
    assert path == [1, 2, 1]
    assert apply_moves(c1, path) == c4


def test_t_path_identity():
    seq = hhat()
    chain = expand_code(seq, -1, ("R", "L"))
    assert t_path(chain, chain) == []


def test_t_path_range_mismatch():
    seq = hhat()
    with pytest.raises(ValueError, match="ranges differ"):
        t_path(expand_code(seq, 0, ("L",)), expand_code(seq, 0, ("R",)))


def test_parse_and_code_string():
    seq = hhat()
    chain = parse_chain(seq, "-1:RL")
    assert chain.base == -1 and chain.code == ("R", "L")
    assert chain.code_string() == "-1:RL"
    assert parse_chain(seq, "5:") == expand_code(seq, 5, ())
    with pytest.raises(ValueError):
        parse_chain(seq, "LL:0")


def test_pretty_matches_worked_example():
    chain = expand_code(hhat(), 0, ("L", "L"))
    assert chain.pretty() == "([0],[-1],[-2,0])"


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["A3", "A4", "B2", "C3"]),
    st.integers(-6, 6),
    st.lists(st.sampled_from("LR"), min_size=0, max_size=11),
)
def test_t_path_random_replay(tag, base, letters):
    seq = canonical_sequence(tag)
    chain1 = expand_code(seq, base, tuple(letters))
    lo, hi = chain1.range
    # random second chain with the same range: pick an independent code
    k = len(letters)
    rs = sum(1 for c in letters if c == "R")
    code2 = ("R",) * rs + ("L",) * (k - rs)
    chain2 = expand_code(seq, base, code2)
    # same number of R letters and same base => same range
    assert chain2.range == (lo, hi)
    path = t_path(chain1, chain2)
    assert apply_moves(chain1, path) == chain2
    assert len(path) <= (k + 1) * (k + 2)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["A3", "B2"]),
    st.integers(-4, 4),
    st.lists(st.sampled_from("LR"), min_size=1, max_size=9),
)
def test_frozen_box_multiset_invariant_under_moves(tag, base, letters):
    seq = canonical_sequence(tag)
    chain = expand_code(seq, base, tuple(letters))
    frozen_boxes = {chain.box(k) for k in frozen_indices(chain)}
    for s, _ in movable_positions(chain):
        moved = box_move(chain, s)
        assert {moved.box(k) for k in frozen_indices(moved)} == frozen_boxes


def test_normalization_reaches_all_L():
    seq = hhat()
    chain = expand_code(seq, -1, ("R", "L", "R", "L"))
    moves = normalization_moves(chain)
    norm = apply_moves(chain, moves)
    assert set(norm.code) <= {"L"}
    assert norm.range == chain.range


def test_lazy_chain_prefixes_and_empty_frozen_set():
    from iboxes.chains import LazyChain

    seq = hhat()
    lazy = LazyChain(seq, 0, lambda k: "L" if k % 2 else "R")
    assert frozen_indices(lazy) == frozenset()
    p3 = lazy.prefix(3)
    assert p3.code == ("L", "R")
    # prefixes are coherent: longer ones extend shorter ones
    p5 = lazy.prefix(5)
    assert p5.code[:2] == p3.code
    assert p5.boxes[:3] == p3.boxes
