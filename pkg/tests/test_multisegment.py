"""Tests for segments, multisegments, weights, and the dominance order."""

import itertools

import pytest
from hypothesis import given, strategies as st

from dcbasis.multisegment import (
    EMPTY,
    Multisegment,
    Segment,
    Weight,
    b_form,
    cartan_pairing,
    compare_segments,
    dominates,
    elementary_moves,
    enumerate_by_weight,
    linked,
    parse_multisegment,
    parse_segment,
    parse_weight,
    segment_intersection,
    segment_key,
    segment_pairing,
    segment_union,
)

segments = st.tuples(st.integers(-4, 4), st.integers(0, 4)).map(
    lambda t: Segment(t[0], t[0] + t[1]))

multisegments = st.lists(segments, max_size=5).map(Multisegment)

WORKED_WEIGHT = Weight({0: 1, 1: 2, 2: 1})
WORKED_LABELS = [
    "[0]+2[1]+[2]",
    "[0]+[1]+[1,2]",
    "[0,1]+[1]+[2]",
    "[0,1]+[1,2]",
    "[1]+[0,2]",
]


# -- segments -------------------------------------------------------------------


def test_segment_basics():
    s = Segment(1, 3)
    assert s.length == 3
    assert str(s) == "[1,3]"
    assert str(Segment(2, 2)) == "[2]"
    assert segment_key(s) == (3, 1)


def test_compare_segments_orders_by_end_then_start():
    assert compare_segments(Segment(0, 1), Segment(2, 2)) == -1
    assert compare_segments(Segment(0, 2), Segment(1, 2)) == -1
    assert compare_segments(Segment(1, 2), Segment(1, 2)) == 0
    assert compare_segments(Segment(3, 3), Segment(0, 2)) == 1


def test_linked_truth_table():
    assert linked(Segment(1, 2), Segment(3, 4))       # adjacent
    assert linked(Segment(1, 3), Segment(2, 4))       # overlapping
    assert linked(Segment(1, 2), Segment(2, 3))       # overlapping
    assert linked(Segment(1, 1), Segment(2, 2))       # adjacent points
    assert not linked(Segment(1, 4), Segment(2, 3))   # nested
    assert not linked(Segment(1, 2), Segment(1, 2))   # equal
    assert not linked(Segment(1, 2), Segment(4, 5))   # gap
    assert not linked(Segment(0, 3), Segment(0, 1))   # shared start, nested


@given(segments, segments)
def test_linked_is_symmetric(a, b):
    assert linked(a, b) == linked(b, a)


def test_union_intersection():
    assert segment_union(Segment(1, 3), Segment(2, 5)) == Segment(1, 5)
    assert segment_intersection(Segment(1, 3), Segment(2, 5)) == Segment(2, 3)
    assert segment_intersection(Segment(1, 2), Segment(4, 5)) is None
    assert segment_intersection(Segment(1, 2), Segment(3, 4)) is None


def test_segment_pairing_pinned():
    assert segment_pairing(Segment(0, 0), Segment(0, 0)) == 2
    assert segment_pairing(Segment(0, 0), Segment(1, 1)) == -1
    assert segment_pairing(Segment(0, 0), Segment(2, 2)) == 0
    assert segment_pairing(Segment(0, 1), Segment(1, 2)) == 0
    assert segment_pairing(Segment(0, 1), Segment(2, 3)) == -1
    assert segment_pairing(Segment(0, 2), Segment(0, 2)) == 2


@given(segments, segments)
def test_segment_pairing_matches_weight_pairing(a, b):
    wa = Multisegment([a]).weight()
    wb = Multisegment([b]).weight()
    assert segment_pairing(a, b) == cartan_pairing(wa, wb)
    assert segment_pairing(a, b) == segment_pairing(b, a)


# -- multisegments ----------------------------------------------------------------


def test_multisegment_construction_sorts_and_accepts_tuples():
    m = Multisegment([(1, 1), (0, 2), (1, 1)])
    assert m.segments == (Segment(1, 1), Segment(1, 1), Segment(0, 2))
    assert len(m) == 3
    assert m == Multisegment([Segment(1, 1), (0, 2), (1, 1)])
    with pytest.raises(ValueError):
        Multisegment([(2, 1)])


def test_multisegment_str_and_counts():
    m = Multisegment([(1, 1), (1, 1), (0, 2)])
    assert str(m) == "2[1]+[0,2]"
    assert m.counts() == [(Segment(1, 1), 2), (Segment(0, 2), 1)]
    assert m.multiplicity(Segment(1, 1)) == 2
    assert m.multiplicity(Segment(5, 5)) == 0
    assert str(EMPTY) == "[]"


def test_degree_weight_and_sums():
    m = Multisegment([(0, 1), (1, 1)])
    assert m.degree() == 3
    assert m.weight() == Weight({0: 1, 1: 2})
    assert m.sq_length_sum() == 5
    assert Multisegment([(1, 1), (1, 1), (1, 1)]).binom_sum() == 3
    assert m.binom_sum() == 0


def test_add_remove_largest():
    m = parse_multisegment("[0]+[1]")
    assert m + parse_multisegment("[0,1]") == parse_multisegment("[0]+[1]+[0,1]")
    assert m.remove(Segment(0, 0)) == parse_multisegment("[1]")
    assert m.largest_segment() == Segment(1, 1)
    with pytest.raises(ValueError):
        EMPTY.largest_segment()
    with pytest.raises(ValueError):
        m.remove(Segment(5, 5))


# -- weights -------------------------------------------------------------------------


def test_weight_basics():
    w = Weight({1: 2, 0: 1})
    assert w.items() == ((0, 1), (1, 2))
    assert w.positions() == (0, 1)
    assert w[1] == 2
    assert w[7] == 0
    assert w.total() == 3
    assert str(w) == "0:1,1:2"
    assert not Weight()
    assert Weight({0: 0}) == Weight()
    with pytest.raises(ValueError):
        Weight({0: -1})


def test_cartan_pairing_pinned():
    assert cartan_pairing(Weight({0: 1}), Weight({0: 1})) == 2
    assert cartan_pairing(Weight({0: 1}), Weight({1: 1})) == -1
    assert cartan_pairing(Weight({0: 1, 1: 1}), Weight({0: 1, 1: 1})) == 2


# -- the bilinear form ----------------------------------------------------------------


def test_b_form_pinned():
    one = parse_multisegment("[1]")
    assert b_form(one, one) == 1
    assert b_form(parse_multisegment("[0]"), one) == 0
    assert b_form(one, parse_multisegment("[0]")) == -1
    assert b_form(parse_multisegment("[1]+[2,3]"),
                  parse_multisegment("[2]+[3,4]")) == 1


def test_b_form_sum_identity_exhaustive():
    window = [Multisegment(segs) for segs in itertools.chain(
        itertools.combinations_with_replacement(
            [Segment(i, j) for i in range(3) for j in range(i, 3)], 1),
        itertools.combinations_with_replacement(
            [Segment(i, j) for i in range(3) for j in range(i, 3)], 2))]
    for m, n in itertools.product(window, repeat=2):
        assert b_form(m, n) + b_form(n, m) == \
            cartan_pairing(m.weight(), n.weight())


@given(multisegments, multisegments)
def test_b_form_sum_identity_random(m, n):
    assert b_form(m, n) + b_form(n, m) == \
        cartan_pairing(m.weight(), n.weight())


# -- elementary moves and dominance ------------------------------------------------------


def test_elementary_moves_pinned():
    assert elementary_moves(parse_multisegment("[0]+[1]")) == \
        [parse_multisegment("[0,1]")]
    assert elementary_moves(parse_multisegment("[1]+[0,2]")) == []
    assert set(elementary_moves(parse_multisegment("[0]+2[1]+[2]"))) == {
        parse_multisegment("[0]+[1]+[1,2]"),
        parse_multisegment("[0,1]+[1]+[2]"),
    }


def test_moves_preserve_weight_and_increase_measure():
    for m in enumerate_by_weight(WORKED_WEIGHT):
        for n in elementary_moves(m):
            assert n.weight() == m.weight()
            assert n.sq_length_sum() > m.sq_length_sum()


def test_dominates_pinned():
    labels = [parse_multisegment(t) for t in WORKED_LABELS]
    m1, m2, m3, m4, m5 = labels
    assert all(dominates(m1, m) for m in labels)
    assert dominates(m2, m4)
    assert dominates(m3, m4)
    assert dominates(m4, m5)
    assert not dominates(m2, m3)
    assert not dominates(m3, m2)
    assert not dominates(m5, m4)
    assert not dominates(m1, parse_multisegment("[0]"))  # different weight


def test_dominance_is_a_partial_order():
    labels = enumerate_by_weight(WORKED_WEIGHT)
    for m in labels:
        assert dominates(m, m)
    for m, n in itertools.permutations(labels, 2):
        if dominates(m, n) and dominates(n, m):
            assert m == n
    for m, n, p in itertools.product(labels, repeat=3):
        if dominates(m, n) and dominates(n, p):
            assert dominates(m, p)


def test_extension_key_extends_dominance():
    for w in (WORKED_WEIGHT, Weight({0: 2, 1: 2})):
        labels = enumerate_by_weight(w)
        for m, n in itertools.permutations(labels, 2):
            if dominates(m, n):
                assert m.extension_key() < n.extension_key()


# -- weight class enumeration ----------------------------------------------------------


def _brute_force_class(w):
    """Independent enumeration: multisets of window segments of weight w."""
    positions = w.positions()
    if not positions:
        return {EMPTY}
    lo, hi = min(positions), max(positions)
    segs = [Segment(i, j) for i in range(lo, hi + 1)
            for j in range(i, hi + 1)]
    total = w.total()
    found = set()
    for r in range(1, total + 1):
        for combo in itertools.combinations_with_replacement(segs, r):
            m = Multisegment(combo)
            if m.weight() == w:
                found.add(m)
    return found


def test_enumeration_order_pinned():
    assert [str(m) for m in enumerate_by_weight(WORKED_WEIGHT)] == WORKED_LABELS


def test_enumeration_matches_brute_force():
    for w in (Weight({0: 1, 1: 1}), WORKED_WEIGHT, Weight({0: 2, 1: 1}),
              Weight({-1: 1, 0: 2, 1: 1}), Weight({0: 3})):
        order = enumerate_by_weight(w)
        assert len(set(order)) == len(order)
        assert set(order) == _brute_force_class(w)


def test_enumeration_is_a_linear_extension():
    for w in (WORKED_WEIGHT, Weight({0: 2, 1: 2}), Weight({0: 1, 1: 1, 2: 1})):
        order = enumerate_by_weight(w)
        singletons = Multisegment(
            [Segment(p, p) for p, c in w.items() for _ in range(c)])
        assert order[0] == singletons
        indexed = list(enumerate(order))
        for i, m in indexed:
            for j, n in indexed:
                if i < j:
                    assert not dominates(n, m)


# -- parsing --------------------------------------------------------------------------


def test_parse_segment():
    assert parse_segment("[1,3]") == Segment(1, 3)
    assert parse_segment("[-2]") == Segment(-2, -2)
    assert parse_segment(" [ 0 , 5 ] ") == Segment(0, 5)
    with pytest.raises(ValueError):
        parse_segment("[3,1]")
    with pytest.raises(ValueError):
        parse_segment("(1,3)")


def test_parse_multisegment():
    assert parse_multisegment("2[1]+[0,2]") == \
        Multisegment([(1, 1), (1, 1), (0, 2)])
    assert parse_multisegment("3*[1]") == Multisegment([(1, 1)] * 3)
    assert parse_multisegment("[]") == EMPTY
    assert parse_multisegment("") == EMPTY
    with pytest.raises(ValueError):
        parse_multisegment("[1]+")
    with pytest.raises(ValueError):
        parse_multisegment("0[1]")


@given(multisegments)
def test_multisegment_round_trip(m):
    assert parse_multisegment(str(m)) == m


def test_parse_weight():
    assert parse_weight("0:1,1:2,2:1") == WORKED_WEIGHT
    assert parse_weight("-1:3") == Weight({-1: 3})
    assert parse_weight("") == Weight()
    with pytest.raises(ValueError):
        parse_weight("0:1,0:2")
    with pytest.raises(ValueError):
        parse_weight("abc")


@given(st.dictionaries(st.integers(-5, 5), st.integers(1, 4), max_size=4))
def test_weight_round_trip(d):
    w = Weight(d)
    assert parse_weight(str(w)) == w


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
