"""Tests for exact Laurent polynomial arithmetic and its involutions."""

import pytest
from hypothesis import given, strategies as st

from dcbasis.laurent import (
    ONE,
    V,
    ZERO,
    ExactDivisionError,
    LaurentPoly,
    parse_laurent,
    quantum_factorial,
    quantum_integer,
)

laurent_polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPoly)

nonzero_polys = laurent_polys.filter(bool)

V_MINUS_VINV = LaurentPoly({1: 1, -1: -1})


# -- construction and basic queries -------------------------------------------


def test_zero_coefficients_are_dropped():
    assert LaurentPoly({3: 0, 1: 2}) == LaurentPoly({1: 2})
    assert LaurentPoly({3: 0}) == ZERO
    assert LaurentPoly(0).is_zero()


def test_int_constructor_and_constants():
    assert LaurentPoly(5) == LaurentPoly({0: 5})
    assert ONE.is_one()
    assert V == LaurentPoly.v_power(1)
    assert not ZERO
    assert ONE


def test_items_are_sorted_descending():
    p = LaurentPoly({-2: 1, 3: 4, 0: -1})
    assert p.items() == [(3, 4), (0, -1), (-2, 1)]


def test_coefficient_lookup():
    p = LaurentPoly({2: 7})
    assert p.coefficient(2) == 7
    assert p.coefficient(0) == 0


def test_exponent_bounds():
    p = LaurentPoly({-3: 1, 5: 2})
    assert p.min_exponent() == -3
    assert p.max_exponent() == 5
    with pytest.raises(ValueError):
        ZERO.min_exponent()
    with pytest.raises(ValueError):
        ZERO.max_exponent()


def test_single_power():
    assert LaurentPoly({4: 1}).single_power() == 4
    assert LaurentPoly({0: 1}).single_power() == 0
    assert LaurentPoly({4: 2}).single_power() is None
    assert LaurentPoly({4: 1, 0: 1}).single_power() is None
    assert ZERO.single_power() is None


def test_sign_and_support_predicates():
    assert LaurentPoly({1: 2, -1: 3}).has_nonnegative_coefficients()
    assert not LaurentPoly({1: 2, 0: -1}).has_nonnegative_coefficients()
    assert LaurentPoly({1: 1, 3: -2}).only_positive_exponents()
    assert not LaurentPoly({0: 1}).only_positive_exponents()
    assert LaurentPoly({-1: 1}).only_positive_exponents() is False


def test_at_one():
    assert LaurentPoly({3: 2, -1: 5}).at_one() == 7
    assert ZERO.at_one() == 0


# -- ring operations -----------------------------------------------------------


def test_docstring_square():
    p = LaurentPoly({1: 2, -1: 2})
    assert p * p == LaurentPoly({2: 4, 0: 8, -2: 4})


def test_integer_coercion():
    assert 1 + V == LaurentPoly({0: 1, 1: 1})
    assert V - 1 == LaurentPoly({1: 1, 0: -1})
    assert 1 - V == LaurentPoly({0: 1, 1: -1})
    assert 2 * V == LaurentPoly({1: 2})
    assert V * 0 == ZERO


def test_power():
    assert (V + 1) ** 0 == ONE
    assert (V + 1) ** 2 == LaurentPoly({2: 1, 1: 2, 0: 1})
    p = quantum_integer(2)
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


@given(laurent_polys, laurent_polys, laurent_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p
    assert p - p == ZERO


@given(laurent_polys, laurent_polys)
def test_evaluation_at_one_is_a_ring_map(p, q):
    assert (p * q).at_one() == p.at_one() * q.at_one()
    assert (p + q).at_one() == p.at_one() + q.at_one()


# -- bar involution and symmetric part -----------------------------------------


@given(laurent_polys)
def test_bar_is_an_involution(p):
    assert p.bar().bar() == p


@given(laurent_polys, laurent_polys)
def test_bar_is_multiplicative(p, q):
    assert (p * q).bar() == p.bar() * q.bar()
    assert (p + q).bar() == p.bar() + q.bar()


def test_bar_symmetry_predicate():
    assert quantum_integer(4).is_bar_symmetric()
    assert ONE.is_bar_symmetric()
    assert ZERO.is_bar_symmetric()
    assert not V.is_bar_symmetric()
    assert not LaurentPoly({1: 1, -1: 2}).is_bar_symmetric()


def test_symmetric_part_pinned():
    assert LaurentPoly({-1: 2, 0: 5, 1: 7}).symmetric_part() == \
        LaurentPoly({1: 2, 0: 5, -1: 2})


@given(laurent_polys)
def test_symmetric_part_properties(p):
    g = p.symmetric_part()
    assert g.is_bar_symmetric()
    assert (p - g).only_positive_exponents() or (p - g).is_zero()


@given(laurent_polys)
def test_symmetric_part_fixes_bar_symmetric_input(p):
    g = (p + p.bar()).symmetric_part()
    assert g == p + p.bar()


# -- exact division --------------------------------------------------------------


@given(laurent_polys)
def test_exact_division_round_trip(q):
    assert (q * V_MINUS_VINV).divide_by_v_minus_vinv() == q


def test_exact_division_rejects_remainders():
    with pytest.raises(ExactDivisionError):
        ONE.divide_by_v_minus_vinv()
    with pytest.raises(ExactDivisionError):
        LaurentPoly({2: 1}).divide_by_v_minus_vinv()
    assert ZERO.divide_by_v_minus_vinv() == ZERO


@given(st.integers(-8, 8))
def test_quantum_integer_telescopes(a):
    assert quantum_integer(a) * V_MINUS_VINV == \
        LaurentPoly({a: 1}) - LaurentPoly({-a: 1})


def test_quantum_integer_pinned():
    assert quantum_integer(0) == ZERO
    assert quantum_integer(1) == ONE
    assert quantum_integer(3) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert quantum_integer(-2) == -quantum_integer(2)


def test_quantum_factorial():
    assert quantum_factorial(0) == ONE
    assert quantum_factorial(1) == ONE
    assert quantum_factorial(3) == LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1})
    assert quantum_factorial(4).at_one() == 24
    assert quantum_factorial(4).is_bar_symmetric()
    with pytest.raises(ValueError):
        quantum_factorial(-1)


# -- rendering and parsing -------------------------------------------------------


def test_str_pinned():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(LaurentPoly({3: 1, 1: 2, -1: -1})) == "v^3 + 2*v - v^-1"
    assert str(LaurentPoly({0: -4})) == "-4"
    assert str(LaurentPoly({-2: 1})) == "v^-2"


def test_parse_pinned():
    assert parse_laurent("v^3 + 2*v - v^-1") == LaurentPoly({3: 1, 1: 2, -1: -1})
    assert parse_laurent("0") == ZERO
    assert parse_laurent("-v") == LaurentPoly({1: -1})
    assert parse_laurent("2*v^2") == LaurentPoly({2: 2})
    assert parse_laurent("  -3*v^-4+1 ") == LaurentPoly({-4: -3, 0: 1})
    with pytest.raises(ValueError):
        parse_laurent("")
    with pytest.raises(ValueError):
        parse_laurent("v +")
    with pytest.raises(ValueError):
        parse_laurent("v w")


@given(laurent_polys)
def test_parse_round_trip(p):
    assert parse_laurent(str(p)) == p


@given(laurent_polys, laurent_polys)
def test_hash_consistency(p, q):
    if p == q:
        assert hash(p) == hash(q)
    assert len({p, q}) == (1 if p == q else 2)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
