from fractions import Fraction

import pytest

from bernsum.bernoulli import Convention, bernoulli_number
from bernsum.faulhaber import (
    bernoulli_polynomial,
    faulhaber_poly,
    faulhaber_variant_eval,
    sum_powers_closed,
    sum_powers_naive,
)
from bernsum.poly import Polynomial


class TestNaiveSum:
    def test_hand_values(self):
        assert sum_powers_naive(3, 2) == 1 + 4 + 9 == 14
        assert sum_powers_naive(100, 1) == 5050

    def test_empty_sum(self):
        assert sum_powers_naive(0, 7) == 0

    def test_domain(self):
        with pytest.raises(ValueError):
            sum_powers_naive(-1, 2)
        with pytest.raises(ValueError):
            sum_powers_naive(3, -1)


class TestFaulhaberPoly:
    def test_linear_minus(self):
        assert faulhaber_poly(1, Convention.MINUS).coeffs == (
            Fraction(0),
            Fraction(-1, 2),
            Fraction(1, 2),
        )

    def test_power_zero(self):
        assert faulhaber_poly(0, Convention.MINUS) == Polynomial([0, 1])
        assert faulhaber_poly(0, Convention.PLUS) == Polynomial([0, 1])

    def test_quadratic_plus_at_three(self):
        assert faulhaber_poly(2, Convention.PLUS).evaluate(3) == 14

    def test_constant_term_always_zero(self):
        for conv in Convention:
            for p in range(12):
                assert faulhaber_poly(p, conv).coefficient(0) == 0

    def test_degree(self):
        for p in range(12):
            assert faulhaber_poly(p, Convention.MINUS).degree == p + 1


class TestClosedForms:
    def test_examples(self):
        assert sum_powers_closed(3, 2) == 14
        assert sum_powers_closed(0, 5) == 0
        assert faulhaber_variant_eval(3, 2) == 14
        assert faulhaber_variant_eval(0, 3) == 0
        assert faulhaber_variant_eval(100, 1) == 5050

    def test_large_case_matches_naive(self):
        assert sum_powers_closed(200, 25) == sum_powers_naive(200, 25)
        assert faulhaber_variant_eval(200, 25) == sum_powers_naive(200, 25)

    def test_variant_rejects_power_zero(self):
        with pytest.raises(ValueError):
            faulhaber_variant_eval(10, 0)

    def test_non_integral_result_is_loud(self, corrupt_plus_table, corrupt_minus_table):
        # a wrong Bernoulli value makes the closed form non-integral,
        # which must surface as an internal error, not a quiet answer
        with pytest.raises(ArithmeticError):
            sum_powers_closed(10, 12)
        with pytest.raises(ArithmeticError):
            faulhaber_variant_eval(9, 12)

    def test_grid_equivalence(self):
        for p in range(11):
            for n in range(51):
                expected = sum_powers_naive(n, p)
                assert sum_powers_closed(n, p) == expected
                if p >= 1:
                    assert faulhaber_variant_eval(n, p) == expected

    def test_one_step_recurrence_full_grid(self):
        # F(n+1, p) - F(n, p) = (n+1)^p
        for p in range(26):
            for n in range(201):
                assert sum_powers_closed(n + 1, p) - sum_powers_closed(n, p) == (n + 1) ** p

    def test_arbitrary_precision_limit(self):
        n = 10**30
        assert sum_powers_closed(n, 1) == n * (n + 1) // 2


class TestBernoulliPolynomial:
    def test_first_three(self):
        assert bernoulli_polynomial(0) == Polynomial([1])
        assert bernoulli_polynomial(1) == Polynomial([Fraction(-1, 2), 1])
        assert bernoulli_polynomial(2) == Polynomial([Fraction(1, 6), -1, 1])

    def test_value_at_zero_is_bernoulli_number(self):
        for conv in Convention:
            for k in range(20):
                poly = bernoulli_polynomial(k, conv)
                assert poly.evaluate(0) == bernoulli_number(conv, k), (conv, k)

    def test_derivative_relation(self):
        # B_k' = k * B_{k-1}, checked at k = 4 and swept to 50
        assert bernoulli_polynomial(4).derivative() == 4 * bernoulli_polynomial(3)
        for k in range(1, 51):
            assert bernoulli_polynomial(k).derivative() == k * bernoulli_polynomial(k - 1)

    def test_difference_gives_power_rule(self):
        for k in range(1, 51):
            assert bernoulli_polynomial(k).forward_difference() == Polynomial.monomial(
                k - 1, k
            )


class TestDifferenceProperties:
    def test_minus_poly_difference_is_monomial(self):
        for k in range(51):
            assert faulhaber_poly(k, Convention.MINUS).forward_difference() == (
                Polynomial.monomial(k)
            )

    def test_plus_poly_difference_is_shifted_monomial(self):
        for k in range(51):
            assert faulhaber_poly(k, Convention.PLUS).forward_difference() == (
                Polynomial.monomial(k).shift(1)
            )

    def test_scaled_power_sum_poly_vs_bernoulli_poly(self):
        # (k+1) f_k agrees with B_{k+1}(x) after dropping its constant term
        for k in range(51):
            lhs = (k + 1) * faulhaber_poly(k, Convention.MINUS)
            bp = bernoulli_polynomial(k + 1)
            rhs = bp - Polynomial([bernoulli_number(Convention.MINUS, k + 1)])
            assert lhs == rhs, k
