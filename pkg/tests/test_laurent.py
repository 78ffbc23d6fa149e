from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clusterchar.errors import (
    DivisionByZero,
    InconsistentExtraPoint,
    InsufficientPoints,
    NonIntegerCoefficients,
    NotDivisible,
    VariableCountMismatch,
)
from clusterchar.laurent import LaurentPoly, UniPoly, exact_div, interpolate, parse_laurent


def lp(nvars, terms):
    return LaurentPoly(nvars, terms)


x1 = LaurentPoly.variable(2, 1)
x2 = LaurentPoly.variable(2, 2)
one2 = LaurentPoly.one(2)


class TestAddMul:
    def test_cancellation(self):
        assert x1 + (-x1) == LaurentPoly.zero(2)

    def test_add(self):
        assert (one2 + x2) + x1 == lp(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})

    def test_doubling(self):
        f = LaurentPoly.one(1) + LaurentPoly.variable(1, 1)
        assert f + f == lp(1, {(0,): 2, (1,): 2})

    def test_product_difference_of_squares(self):
        assert (x1 + x2) * (x1 - x2) == lp(2, {(2, 0): 1, (0, 2): -1})

    def test_square(self):
        y = LaurentPoly.variable(1, 1)
        assert (LaurentPoly.one(1) + y) ** 2 == lp(1, {(0,): 1, (1,): 2, (2,): 1})

    def test_laurent_product(self):
        # (1+x1)*x2^-1 times (1+x2)*x1^-1, expanded by hand
        a = (one2 + x1) * LaurentPoly.monomial(2, (0, -1))
        b = (one2 + x2) * LaurentPoly.monomial(2, (-1, 0))
        expected = (one2 + x1 + x2 + x1 * x2) * LaurentPoly.monomial(2, (-1, -1))
        assert a * b == expected

    def test_variable_count_mismatch(self):
        with pytest.raises(VariableCountMismatch):
            x1 + LaurentPoly.variable(3, 1)
        with pytest.raises(VariableCountMismatch):
            x1 * LaurentPoly.variable(1, 1)


class TestExactDiv:
    def test_factorization(self):
        num = one2 + x1 + x2 + x1 * x2
        assert exact_div(num, one2 + x1) == one2 + x2

    def test_monomial_divisor(self):
        num = x2 + one2
        expected = lp(2, {(-1, 1): 1, (-1, 0): 1})
        assert exact_div(num, x1) == expected

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_div(one2 + x1 + x2, one2 + x2)

    def test_zero_divisor(self):
        with pytest.raises(DivisionByZero):
            exact_div(x1, LaurentPoly.zero(2))

    def test_zero_numerator(self):
        assert exact_div(LaurentPoly.zero(2), x1 + one2) == LaurentPoly.zero(2)

    def test_coefficient_divisibility(self):
        with pytest.raises(NotDivisible):
            exact_div(x1, LaurentPoly.constant(2, 2))
        assert exact_div(2 * x1, LaurentPoly.constant(2, 2)) == x1


class TestSubstitute:
    def test_single(self):
        f = LaurentPoly.one(1) + LaurentPoly.variable(1, 1)
        val = LaurentPoly.monomial(2, (0, -1))
        assert f.substitute([val]) == one2 + val

    def test_monomial_product(self):
        f = LaurentPoly.monomial(2, (1, 1))
        vals = [LaurentPoly.monomial(3, (0, -1, 0)), LaurentPoly.monomial(3, (1, 0, -1))]
        assert f.substitute(vals) == LaurentPoly.monomial(3, (1, -1, -1))

    def test_length_mismatch(self):
        f = LaurentPoly.one(2)
        with pytest.raises(VariableCountMismatch):
            f.substitute([x1])

    def test_negative_exponent_rejected(self):
        f = LaurentPoly.monomial(1, (-1,))
        with pytest.raises(NotDivisible):
            f.substitute([one2 + x1])


class TestStrings:
    def test_grammar_example(self):
        p = lp(4, {(-1, 0, 0, 1): 1, (0, 1, 0, 0): 2})
        assert p.to_str() == "x1^-1*x4 + 2*x2"

    def test_term_order(self):
        # grade ascending, lex descending within a grade
        p = lp(4, {(1, 1, 0, 0): 1, (1, 0, 0, 1): 1, (0, 0, 1, 1): 1, (0, 1, 1, 1): 1})
        assert p.to_str() == "x1*x2 + x1*x4 + x3*x4 + x2*x3*x4"

    def test_negative_and_constant(self):
        p = lp(2, {(0, 0): -3, (2, 0): 1})
        assert p.to_str() == "-3 + x1^2"

    def test_zero(self):
        assert LaurentPoly.zero(2).to_str() == "0"
        assert parse_laurent("0", 2) == LaurentPoly.zero(2)

    def test_fraction_display(self):
        p = lp(2, {(1, -1): 1, (-1, 1): 1})
        assert p.fraction_str() == "(x1^2 + x2^2)/(x1*x2)"
        q = lp(2, {(1, -1): 1, (0, -1): 1})
        assert q.fraction_str() == "(1 + x1)/x2"
        assert (x1 + x2).fraction_str() == "x1 + x2"

    @given(
        st.integers(1, 3).flatmap(
            lambda n: st.dictionaries(
                st.tuples(*[st.integers(-3, 3)] * n),
                st.integers(-5, 5),
                max_size=5,
            ).map(lambda terms: LaurentPoly(n, terms))
        )
    )
    def test_parse_round_trip(self, p):
        assert parse_laurent(p.to_str(), p.nvars) == p


small_polys = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    st.integers(-4, 4),
    max_size=4,
).map(lambda terms: LaurentPoly(2, terms))


class TestRingAxioms:
    @settings(max_examples=60)
    @given(small_polys, small_polys, small_polys)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)

    @settings(max_examples=60)
    @given(small_polys, small_polys)
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a

    @settings(max_examples=60)
    @given(small_polys, small_polys, small_polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60)
    @given(small_polys, small_polys)
    def test_division_round_trip(self, a, b):
        if b.is_zero():
            return
        assert exact_div(a * b, b) == a

    @settings(max_examples=30)
    @given(small_polys)
    def test_normalization_idempotent(self, p):
        assert LaurentPoly(p.nvars, p.terms) == p
        assert LaurentPoly(p.nvars, dict(p.sorted_terms())) == p


class TestInterpolate:
    def test_line(self):
        poly = interpolate([(2, 3), (3, 4), (5, 6)], 2)
        assert poly.coeffs == (Fraction(1), Fraction(1))
        assert str(poly) == "q + 1"

    def test_constant(self):
        poly = interpolate([(2, 1), (3, 1), (5, 1)], 2)
        assert poly.coeffs == (Fraction(1),)

    def test_projective_plane(self):
        poly = interpolate([(2, 7), (3, 13), (5, 31)], 2)
        assert poly.coeffs == (Fraction(1), Fraction(1), Fraction(1))
        for q, y in [(2, 7), (3, 13), (5, 31)]:
            assert poly(q) == y

    def test_insufficient(self):
        with pytest.raises(InsufficientPoints):
            interpolate([(2, 3), (3, 4)], 2)
        with pytest.raises(InsufficientPoints):
            interpolate([(2, 3), (2, 3), (3, 4)], 2)

    def test_inconsistent_extra(self):
        with pytest.raises(InconsistentExtraPoint):
            interpolate([(2, 3), (3, 4), (5, 6), (7, 9)], 2)

    def test_non_integer(self):
        # points on q/2, exactly interpolable but not integral
        with pytest.raises(NonIntegerCoefficients):
            interpolate([(2, 1), (4, 2), (6, 3)], 2)

    def test_reproduces_inputs(self):
        points = [(2, 35), (3, 130), (5, 806), (7, 2850), (11, 16226)]
        poly = interpolate(points, 4)
        for q, y in points:
            assert poly(q) == y

    def test_unipoly_str(self):
        assert str(UniPoly([1, 0, 2])) == "2*q^2 + 1"
        assert str(UniPoly([-1, 1])) == "q - 1"
        assert str(UniPoly([])) == "0"
