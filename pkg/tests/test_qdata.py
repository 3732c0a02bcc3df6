import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iboxes.qdata import (
    HatIndex,
    QDatum,
    adapted_word,
    default_height,
    default_q_datum,
    fundamental_label,
    hat_points,
    in_hat_lattice,
    is_adapted,
    phi_q,
    phi_q_inv,
    reflect_q,
    reflect_q_inv,
    sinks,
    sources,
    validate_q_datum,
)
from iboxes.roots import beta_sequence, folded_datum, positive_roots


def q_a3():
    return QDatum(folded_datum("A3"), {1: 0, 2: 1, 3: 0})


def q_b2():
    return QDatum(folded_datum("B2"), {1: 1, 2: 0, 3: -1})


def test_validate_examples():
    assert validate_q_datum(q_a3())
    assert validate_q_datum(q_b2())
    bad = validate_q_datum(QDatum(folded_datum("A3"), {1: 0, 2: 0, 3: 0}))
    assert not bad
    assert len(bad.violations) == 2  # both edges break condition (i)


def test_validate_orbit_uniqueness():
    # no orbit member carries the +2 ladder here, so condition (ii) fails
    assert not validate_q_datum(QDatum(folded_datum("B2"), {1: 1, 2: 0, 3: 1}))
    # reflecting the default at its sink keeps it valid
    assert validate_q_datum(QDatum(folded_datum("B2"), {1: 1, 2: 0, 3: 3}))
    assert validate_q_datum(QDatum(folded_datum("B2"), {1: 3, 2: 0, 3: 1}))


def test_default_heights_validate():
    for tag in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5",
                "E6", "F4", "G2", "A5(2)", "D4(2)", "E6(2)", "D4(3)"]:
        q = default_q_datum(tag)
        assert validate_q_datum(q), (tag, validate_q_datum(q).violations)


def test_example_heights_validate():
    from iboxes.qdata import example_height

    for tag in ["A3", "A4", "B2", "B3", "C3", "D4", "D5", "F4", "G2"]:
        datum = folded_datum(tag)
        assert validate_q_datum(QDatum(datum, example_height(datum)))


def test_sinks_and_reflections():
    q = q_a3()
    assert sinks(q) == (1, 3)
    assert reflect_q(q, 1).xi == {1: 2, 2: 1, 3: 0}
    with pytest.raises(ValueError, match="not a sink"):
        reflect_q(q, 2)
    r = reflect_q(q, 1)
    assert validate_q_datum(r)
    assert reflect_q_inv(r, 1) == q


def test_sources_roundtrip_b2():
    q = q_b2()
    for i in sinks(q):
        r = reflect_q(q, i)
        assert validate_q_datum(r)
        assert i in sources(r)
        assert reflect_q_inv(r, i) == q


def test_hat_lattice_membership():
    q = q_b2()
    # orbit nodes step by 4, the fixed node by 2
    assert in_hat_lattice(q, 1, -7)
    assert in_hat_lattice(q, 2, -6)
    assert in_hat_lattice(q, 3, -5)
    assert not in_hat_lattice(q, 1, 0)
    pts = hat_points(q, -4, 0)
    assert HatIndex(1, -3) in pts and HatIndex(2, -4) in pts
    assert HatIndex(1, -4) not in pts


def test_is_adapted():
    q = q_a3()
    assert is_adapted(q, (1, 3, 2, 1, 3, 2))
    assert not is_adapted(q, (2, 1, 3, 2, 1, 3))
    assert is_adapted(q, ())


def test_adapted_word_is_adapted_reduced():
    from iboxes.roots import is_reduced

    for tag in ["A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2", "E6"]:
        q = default_q_datum(tag)
        w = adapted_word(q)
        assert len(w) == q.datum.ell
        assert is_reduced(q.datum.diagram, w)
        assert is_adapted(q, w)


def test_phi_base_block():
    q = q_a3()
    word = (1, 3, 2, 1, 3, 2)
    assert phi_q(q, word, HatIndex(1, 0)) == ((1, 0, 0), 0)
    assert phi_q(q, word, HatIndex(2, 1)) == ((1, 1, 1), 0)
    # one dual step up: the color is starred, the root repeats
    assert phi_q(q, word, HatIndex(3, 4)) == ((1, 0, 0), 1)
    assert phi_q(q, word, HatIndex(1, 4)) == ((0, 0, 1), 1)
    assert phi_q(q, word, HatIndex(2, 5)) == ((1, 1, 1), 1)


def test_phi_errors_off_lattice():
    q = q_a3()
    with pytest.raises(ValueError, match="lattice"):
        phi_q(q, (1, 3, 2, 1, 3, 2), HatIndex(1, 1))


def test_phi_roundtrip_and_bijectivity():
    for tag in ["A3", "B2", "C3", "D4", "G2"]:
        q = default_q_datum(tag)
        word = adapted_word(q)
        datum = q.datum
        period = datum.ord_sigma * datum.h_dual
        # the window {(i,p): xi_i <= p < xi_{i*} + period} maps onto Phi+ x {0}
        images = set()
        for i in datum.nodes:
            p = q.xi[i]
            while p < q.xi[datum.star[i]] + period:
                if in_hat_lattice(q, i, p):
                    beta, m = phi_q(q, word, HatIndex(i, p))
                    assert m == 0
                    assert phi_q_inv(q, word, beta, 0) == HatIndex(i, p)
                    images.add(beta)
                p += 1
        assert images == set(positive_roots(datum.diagram))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2", "C3"]), st.integers(-3, 3))
def test_phi_periodicity(tag, m):
    q = default_q_datum(tag)
    word = adapted_word(q)
    datum = q.datum
    period = datum.ord_sigma * datum.h_dual
    i = datum.nodes[0]
    x = HatIndex(i, q.xi[i])
    beta, level = phi_q(q, word, x)
    shifted = HatIndex(datum.star_power(i, m), q.xi[i] + m * period)
    assert phi_q(q, word, shifted) == (beta, level + m)


def test_fundamental_labels():
    a3 = folded_datum("A3")
    assert fundamental_label(a3, 2, 5) == "V(ϖ₂)_{(-q)^5}"
    b3 = folded_datum("B3")
    # distance(2, n=3) = 1 in the A5 diagram: sign -1
    assert fundamental_label(b3, 2, 4) == "V(ϖ₂)_{-(q^(1/2))^4}"
    # distance(3, 3) = 0: no sign
    assert fundamental_label(b3, 3, 0) == "V(ϖ₃)_{(q^(1/2))^0}"
    d43 = folded_datum("D4(3)")
    assert fundamental_label(d43, 3, 2) == "V(ϖ₁)_{ω(-q)^2}"
    assert fundamental_label(d43, 2, 1) == "V(ϖ₂)_{-(-q)^1}"


def test_q_datum_json_roundtrip():
    q = q_b2()
    assert QDatum.from_json(q.to_json()) == q


def test_heights_on_one_lattice_differ_by_shift_and_orbit_twist():
    # reflections never change the lattice; global height shifts translate it
    q = q_b2()
    for i in sinks(q):
        assert hat_points(reflect_q(q, i), -8, 8) == hat_points(q, -8, 8)
    shifted = QDatum(q.datum, {i: v + 1 for i, v in q.xi.items()})
    assert validate_q_datum(shifted)
    pts = {(x.node, x.level) for x in hat_points(q, -8, 7)}
    pts_up = {(x.node, x.level) for x in hat_points(shifted, -7, 8)}
    assert pts_up == {(i, p + 1) for (i, p) in pts}


def test_phi_matches_coxeter_induction_oracle():
    """Independent route to phi for trivial sigma: the first |nodes| letters of
    the reading word form an adapted Coxeter word tau, and raising a level by
    2 applies tau to the root, bumping the dual level on sign change."""
    from iboxes.roots import apply_matrix, word_matrix

    for tag in ["A3", "A4", "D4", "E6"]:
        q = default_q_datum(tag)
        datum = q.datum
        word = adapted_word(q)
        n = len(datum.nodes)
        assert sorted(word[:n]) == list(datum.nodes)
        tau = word_matrix(datum.diagram, word[:n])
        for i in datum.nodes:
            p = q.xi[i]
            beta, m = phi_q(q, word, HatIndex(i, p))
            for _ in range(2 * datum.h_dual):
                image = apply_matrix(tau, beta)
                if all(c >= 0 for c in image):
                    expected = (image, m)
                else:
                    expected = (tuple(-c for c in image), m + 1)
                beta, m = phi_q(q, word, HatIndex(i, p + 2))
                assert (beta, m) == expected, (tag, i, p)
                p += 2
