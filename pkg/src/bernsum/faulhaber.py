"""Sums of powers F(n, p) = 1^p + 2^p + ... + n^p, exactly.

Three routes are exposed: the direct summation (the oracle the closed
forms are judged against), the classical closed form built from the
plus-convention Bernoulli numbers and evaluated at n, and the
minus-convention variant evaluated at n + 1. Also builds the standard
Bernoulli polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .bernoulli import Convention, bernoulli_numbers
from .exactnum import binomial, format_rational
from .poly import Polynomial

__all__ = [
    "sum_powers_naive",
    "faulhaber_poly",
    "sum_powers_closed",
    "faulhaber_variant_eval",
    "bernoulli_polynomial",
]


def _check_domain(n: int, p: int) -> None:
    if n < 0:
        raise ValueError(f"summation limit must be >= 0, got n={n}")
    if p < 0:
        raise ValueError(f"power must be >= 0, got p={p}")


def sum_powers_naive(n: int, p: int) -> int:
    """Direct accumulation of sum_{i=1}^{n} i^p; F(0, p) = 0."""
    _check_domain(n, p)
    return sum(i**p for i in range(1, n + 1))


def faulhaber_poly(p: int, conv: Convention) -> Polynomial:
    """The degree-(p+1) power-sum polynomial for one convention.

    Coefficient of x^(p+1-j) is C(p+1, j) * B_j / (p+1) for j = 0..p;
    the constant term is 0. With the plus convention the polynomial
    gives F(n, p) at x = n; with the minus convention it gives F(n, p)
    at x = n + 1, and its forward difference is exactly x^p.
    """
    if p < 0:
        raise ValueError(f"power must be >= 0, got p={p}")
    bern = bernoulli_numbers(conv, p)
    coeffs = [Fraction(0)] * (p + 2)
    for j in range(p + 1):
        coeffs[p + 1 - j] = Fraction(binomial(p + 1, j)) * bern[j] / (p + 1)
    return Polynomial(coeffs)


def _integer_result(value: Fraction, n: int, p: int, route: str) -> int:
    # A non-integer here means the Bernoulli coefficients are wrong, not
    # that the input was bad; fail loudly.
    if value.denominator != 1:
        raise ArithmeticError(
            f"{route} produced the non-integer {format_rational(value)} "
            f"for F({n}, {p}); this indicates an internal arithmetic bug"
        )
    return value.numerator


def sum_powers_closed(n: int, p: int) -> int:
    """F(n, p) by evaluating the plus-convention closed form at n."""
    _check_domain(n, p)
    value = faulhaber_poly(p, Convention.PLUS).evaluate(n)
    return _integer_result(value, n, p, "closed form (plus convention)")


def faulhaber_variant_eval(n: int, p: int) -> int:
    """F(n, p) by evaluating the minus-convention form at n + 1; needs p > 0.

    At p = 0 the formula gives n + 1 rather than F(n, 0) = n, so that
    case is rejected instead of silently returning the wrong value.
    """
    _check_domain(n, p)
    if p == 0:
        raise ValueError("the minus-convention variant requires p >= 1")
    value = faulhaber_poly(p, Convention.MINUS).evaluate(n + 1)
    return _integer_result(value, n, p, "closed form (minus convention, at n+1)")


def bernoulli_polynomial(k: int, conv: Convention = Convention.MINUS) -> Polynomial:
    """The k-th Bernoulli polynomial sum_{j=0}^{k} C(k, j) B_j x^(k-j).

    B_k(0) equals the convention's k-th Bernoulli number. The standard
    polynomial uses the minus convention, which is the default.
    """
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    bern = bernoulli_numbers(conv, k)
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] = binomial(k, j) * bern[j]
    return Polynomial(coeffs)
