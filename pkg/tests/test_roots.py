import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iboxes.roots import (
    UnsupportedTypeError,
    apply_matrix,
    beta_sequence,
    diagram,
    folded_datum,
    is_reduced,
    longest_word,
    positive_roots,
    reflect,
    simple_root,
    word_matrix,
)

from oracles import enumerate_weyl, matrix_of


def test_folded_table_a3():
    d = folded_datum("A3(1)")
    assert d.diagram.label == "A3"
    assert d.sigma == {1: 1, 2: 2, 3: 3}
    assert d.ord_sigma == 1
    assert d.h_dual == 4
    assert d.ell == 6
    assert d.star == {1: 3, 2: 2, 3: 1}


def test_folded_table_b2():
    d = folded_datum("B2")
    assert d.diagram.label == "A3"
    assert d.sigma == {1: 3, 2: 2, 3: 1}
    assert d.ord_sigma == 2
    assert d.d == {1: 2, 2: 1, 3: 2}
    assert d.h_dual == 3


def test_folded_table_a1():
    d = folded_datum("A1")
    assert d.ell == 1
    assert d.h_dual == 2
    assert d.star == {1: 1}


@pytest.mark.parametrize(
    "tag, delta, hdual, ell",
    [
        ("A4(1)", "A4", 5, 10),
        ("B3(1)", "A5", 5, 15),
        ("C3(1)", "D4", 4, 12),
        ("D4(1)", "D4", 6, 12),
        ("E6(1)", "E6", 12, 36),
        ("E7(1)", "E7", 18, 63),
        ("E8(1)", "E8", 30, 120),
        ("F4(1)", "E6", 9, 36),
        ("G2(1)", "D4", 4, 12),
        ("A5(2)", "A5", 6, 15),
        ("D4(2)", "D4", 6, 12),
        ("E6(2)", "E6", 12, 36),
        ("D4(3)", "D4", 6, 12),
    ],
)
def test_folded_table_rows(tag, delta, hdual, ell):
    d = folded_datum(tag)
    assert d.diagram.label == delta
    assert d.h_dual == hdual
    assert d.ell == ell


def test_unsupported_tag():
    with pytest.raises(UnsupportedTypeError):
        folded_datum("H4")
    with pytest.raises(UnsupportedTypeError):
        folded_datum("B1")


def test_reflect_examples():
    a3 = diagram("A", 3)
    # <h_2, a1+a2+a3> = 0, so the reflection fixes it
    assert reflect(a3, 2, (1, 1, 1)) == (1, 1, 1)
    assert reflect(a3, 1, simple_root(a3, 1)) == (-1, 0, 0)


def test_reflect_matches_bruteforce_pairing():
    a3 = diagram("A", 3)
    from oracles import reflect_vec

    for i in a3.nodes:
        for v in [(1, 0, 0), (0, 1, 1), (2, -1, 3), (1, 1, 1)]:
            assert reflect(a3, i, v) == reflect_vec(a3, i, v)


def test_is_reduced_against_enumeration_a3():
    a3 = diagram("A", 3)
    lengths = enumerate_weyl(a3)
    assert len(lengths) == 24
    w0_len = max(lengths.values())
    assert w0_len == 6

    word = (1, 3, 2, 1, 3, 2)
    assert is_reduced(a3, word)
    assert lengths[matrix_of(a3, word)] == 6  # the word lands on w0

    assert not is_reduced(a3, (1, 1))
    assert not is_reduced(a3, (1, 2, 1, 2))  # length(s1s2s1s2) = 2 in A2 x ...


def test_longest_word_properties():
    for fam, n in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("E", 6)]:
        diag = diagram(fam, n)
        w0 = longest_word(diag)
        assert len(w0) == len(positive_roots(diag))
        assert is_reduced(diag, w0)
        # w0 sends every positive root to a negative one
        mat = word_matrix(diag, w0)
        for beta in positive_roots(diag):
            assert all(c <= 0 for c in apply_matrix(mat, beta))


def test_beta_sequence_enumerates_positive_roots():
    a3 = diagram("A", 3)
    betas = beta_sequence(a3, (1, 3, 2, 1, 3, 2))
    assert sorted(betas) == sorted(positive_roots(a3))
    assert betas[0] == (1, 0, 0)
    assert betas[2] == (1, 1, 1)  # s1 s3 (alpha_2)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=4), min_size=0, max_size=10))
def test_length_never_exceeds_word_length_a4(word):
    diag = diagram("A", 4)
    from iboxes.roots import inversions

    assert inversions(diag, word_matrix(diag, tuple(word))) <= len(word)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2", "C3", "D4", "G2", "A5(2)"]))
def test_star_is_adjacency_preserving_involution(tag):
    d = folded_datum(tag)
    for i in d.nodes:
        assert d.star[d.star[i]] == i
    for a, b in d.diagram.edges:
        assert d.adjacent(d.star[a], d.star[b])


def test_reduced_words_enumerate_positive_roots_property():
    # every reduced word of w0 yields all positive roots without repetition
    a3 = diagram("A", 3)
    lengths = enumerate_weyl(a3)
    w0m = max(lengths, key=lengths.get)
    import itertools

    found = 0
    for word in itertools.product(a3.nodes, repeat=6):
        if matrix_of(a3, word) == w0m and is_reduced(a3, word):
            betas = beta_sequence(a3, word)
            assert len(set(betas)) == 6
            assert sorted(betas) == sorted(positive_roots(a3))
            found += 1
    assert found == 16  # |reduced words of w0| in A3


def test_reflect_is_involution():
    a3 = diagram("A", 3)
    for i in a3.nodes:
        for v in [(1, 0, 0), (0, 1, 1), (2, -1, 3), (1, 1, 1)]:
            assert reflect(a3, i, reflect(a3, i, v)) == v
