"""Exact Laurent-polynomial and rational-function arithmetic."""

import random
from fractions import Fraction

import pytest

from hhlattice.algebra import (LaurentPolynomial, RationalFunction, anon_var,
                               exact_divide, free_var, row_seed,
                               split_monomial_content, total_degree,
                               variable_from_name, variables)
from hhlattice.errors import PoleError, ZeroPolynomialError
from hhlattice.gcd import poly_gcd

X, Y, Z = variables("x y z")
VX, VY = anon_var("x"), anon_var("y")


def rand_poly(rng, nvars=3, max_terms=5, max_deg=4, laurent=False):
    vars_ = [anon_var(n) for n in "uvwxyz"[:nvars]]
    p = LaurentPolynomial.zero()
    for _ in range(rng.randint(1, max_terms)):
        term = LaurentPolynomial.constant(rng.randint(-6, 6))
        for v in vars_:
            lo = -max_deg if laurent else 0
            term = term * LaurentPolynomial.variable(v, rng.randint(lo, max_deg))
        p = p + term
    return p


class TestArithmetic:
    def test_product_difference_of_squares(self):
        assert (X + Y) * (X - Y) == X * X - Y * Y

    def test_cancellation_keeps_inverse_power(self):
        assert (X ** -1 + Y) + (-Y) == X ** -1

    def test_one_is_multiplicative_identity(self):
        p = 3 * X * X - Y + 7
        assert p * LaurentPolynomial.one() == p

    def test_ring_axioms_randomized(self):
        rng = random.Random(101)
        for _ in range(25):
            p, q, r = (rand_poly(rng, laurent=True) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert p * (q + r) == p * q + p * r
            assert p * q == q * p

    def test_integer_coercion(self):
        assert 1 + X - 1 == X
        assert 2 * X == X + X

    def test_negative_power_requires_unit(self):
        with pytest.raises(ValueError):
            (X + Y) ** -1
        assert (2 * X) ** 2 == 4 * X * X


class TestExactDivide:
    def test_difference_of_squares(self):
        assert exact_divide(X * X - Y * Y, X + Y) == X - Y

    def test_monomial_quotient(self):
        assert exact_divide(3 * X * X * Y ** -1, X * Y ** -1) == 3 * X

    def test_not_divisible(self):
        assert exact_divide(X + 1, X - 1) is None

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(X, LaurentPolynomial.zero())

    def test_zero_dividend(self):
        assert exact_divide(LaurentPolynomial.zero(), X).is_zero()

    def test_coefficient_divisibility_required(self):
        assert exact_divide(3 * X, LaurentPolynomial.constant(2)) is None

    def test_roundtrip_randomized(self):
        rng = random.Random(202)
        for _ in range(40):
            p = rand_poly(rng, nvars=3, max_deg=3)
            d = rand_poly(rng, nvars=3, max_deg=2)
            if d.is_zero():
                continue
            q = exact_divide(p * d, d)
            assert q == p


class TestMonomialSplit:
    def test_mixed_signs(self):
        split = split_monomial_content(X ** -1 * Y ** 2 + Y ** 3)
        assert split.content == 1
        assert str(split.monomial()) == "x^-1*y^2"
        assert split.residual == 1 + X * Y

    def test_pure_monomial(self):
        split = split_monomial_content(6 * X * X)
        assert split.content == 6
        assert split.residual.is_one()

    def test_plain_polynomial(self):
        split = split_monomial_content(X + Y)
        assert split.content == 1 and split.exponents.is_empty()
        assert split.residual == X + Y

    def test_sign_moves_to_content(self):
        split = split_monomial_content(-X - Y)
        assert split.content == -1
        assert split.residual == X + Y

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            split_monomial_content(LaurentPolynomial.zero())

    def test_roundtrip_randomized(self):
        rng = random.Random(303)
        for _ in range(40):
            p = rand_poly(rng, laurent=True)
            if p.is_zero():
                continue
            split = split_monomial_content(p)
            assert split.recompose() == p
            for _, exp in split.exponents.pairs:
                assert exp != 0


class TestPolyGcd:
    def test_common_linear_factor(self):
        g = poly_gcd(X * X - Y * Y, (X + Y) * (X + Y))
        assert g == X + Y

    def test_coprime(self):
        assert poly_gcd(X + 1, X + 2).is_one()

    def test_gcd_with_zero(self):
        assert poly_gcd(X + 1, LaurentPolynomial.zero()) == X + 1
        # the residual of a pure monomial is 1
        assert poly_gcd(6 * X * X, LaurentPolynomial.zero()).is_one()

    def test_divides_product_randomized(self):
        rng = random.Random(404)
        for _ in range(12):
            p = rand_poly(rng, nvars=2, max_terms=3, max_deg=2)
            q = rand_poly(rng, nvars=2, max_terms=3, max_deg=2)
            g = rand_poly(rng, nvars=2, max_terms=3, max_deg=2)
            if g.is_zero() or p.is_zero() or q.is_zero():
                continue
            result = poly_gcd(p * g, q * g)
            g_res = split_monomial_content(g).residual
            assert exact_divide(result, g_res) is not None

    def test_gcd_divides_both_inputs(self):
        rng = random.Random(505)
        for _ in range(12):
            p = rand_poly(rng, nvars=3, max_terms=4, max_deg=2)
            q = rand_poly(rng, nvars=3, max_terms=4, max_deg=2)
            if p.is_zero() or q.is_zero():
                continue
            g = poly_gcd(p, q)
            rp = split_monomial_content(p).residual
            rq = split_monomial_content(q).residual
            assert exact_divide(rp, g) is not None
            assert exact_divide(rq, g) is not None


class TestEvaluate:
    def test_polynomial_point(self):
        assert (X * X - Y * Y).evaluate({VX: 3, VY: 2}) == 5

    def test_negative_power(self):
        assert (X ** -1).evaluate({VX: Fraction(2)}) == Fraction(1, 2)

    def test_pole(self):
        with pytest.raises(PoleError):
            (X ** -1).evaluate({VX: 0})

    def test_morphism_randomized(self):
        rng = random.Random(606)
        names = [anon_var(n) for n in "uvw"]
        for _ in range(25):
            p = rand_poly(rng, nvars=3)
            q = rand_poly(rng, nvars=3)
            point = {v: Fraction(rng.randint(1, 9), rng.randint(1, 9))
                     for v in names}
            assert (p * q).evaluate(point) == \
                p.evaluate(point) * q.evaluate(point)
            assert (p + q).evaluate(point) == \
                p.evaluate(point) + q.evaluate(point)


class TestDegrees:
    def test_positive_monomial_content_is_split_off(self):
        # x^2 y + y = y (x^2 + 1): residual degree 2, monomial degree 1
        assert total_degree(X * X * Y + Y) == (2, 1)

    def test_monomial_degree_counts_absolute_exponents(self):
        assert total_degree(X ** -1 * Y ** 2) == (0, 3)

    def test_constant(self):
        assert total_degree(LaurentPolynomial.constant(5)) == (0, 0)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            total_degree(LaurentPolynomial.zero())


class TestRationalFunction:
    def test_reduction_to_laurent(self):
        value = (X * X - Y * Y) / (X + Y)
        assert isinstance(value, LaurentPolynomial)
        assert value == X - Y

    def test_monomial_denominator_absorbed(self):
        r = RationalFunction.make(X * X - Y * Y, (X + Y) * X)
        assert isinstance(r, RationalFunction)
        assert r.is_laurent()
        assert r.as_laurent() == 1 - X ** -1 * Y

    def test_denominator_sign_normalized(self):
        r = (X + 1) / (1 - X)
        assert isinstance(r, RationalFunction)
        lead_ev, lead_c = r.den.leading_term()
        assert lead_c > 0

    def test_field_operations(self):
        r = (X + 1) / (X - 1)
        assert r * (X - 1) == X + 1
        assert r - r == 0
        assert (r / r) == 1
        s = 1 / (X - 1)
        assert r - 1 == 2 * s

    def test_structural_equality_is_canonical(self):
        a = (X * X - 1) / ((X - 1) * Y)
        b = (X + 1) / Y
        assert a == b

    def test_integer_content_cancelled(self):
        r = RationalFunction.make(2 * X, LaurentPolynomial.constant(2))
        assert r == X

    def test_nonunit_integer_denominator_is_not_laurent(self):
        r = RationalFunction.make(X, LaurentPolynomial.constant(2))
        assert isinstance(r, RationalFunction) and not r.is_laurent()

    def test_evaluate_with_pole(self):
        r = (X + 1) / (X - 1)
        assert r.evaluate({VX: 3}) == 2
        with pytest.raises(PoleError):
            r.evaluate({VX: 1})


class TestVariables:
    def test_seed_names_roundtrip(self):
        for var in (row_seed(3), free_var(7)):
            assert variable_from_name(var.name) == var

    def test_column_seed_names(self):
        assert variable_from_name("x0_2").kind == "col0"
        assert variable_from_name("x1_5").kind == "col1"
        assert variable_from_name("x4_0").kind == "row"
        assert variable_from_name("x3_2").kind == "anon"

    def test_term_order_is_stable(self):
        # lexicographic: the earliest variable dominates the term order
        p = X + Y + Z
        assert [str(ev) for ev, _ in p.sorted_terms()] == ["x", "y", "z"]
        assert str(p) == "x + y + z"
