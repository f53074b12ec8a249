"""Minimal-degree polynomial solutions of f(x) + r(x) = f(x+1).

For the monomial right-hand side x^k, matching coefficients of
f(x) + x^k = f(x+1) over a degree-(k+1) ansatz sum a_j x^j gives a
triangular system solved by back-substitution from the top:

    a_{k+1} = 1/(k+1)
    a_j     = -(sum_{l=j+1}^{k+1} a_l * C(l, j-1)) / j   for j = k..1

The constant a_0 cancels from f(x+1) - f(x), so the equation leaves it
free; solutions here are normalized by a_0 = 0, i.e. f(0) = 0, which
matches the empty power sum F(0, p) = 0 and makes solutions unique.

Scaling by (k+1) and reindexing the coefficients recovers the first
k+1 Bernoulli numbers: b_j = (k+1) a_{k+1-j} / C(k+1, j). The monomial
problem yields the minus convention; the shifted problem
f(x) + (x+1)^k = f(x+1) yields the plus convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import Convention
from .exactnum import binomial
from .poly import Polynomial

__all__ = [
    "NORMALIZATION_NOTE",
    "FeqSolution",
    "solve_monomial",
    "solve_shifted",
    "solve_difference",
    "extract_bernoulli",
]

NORMALIZATION_NOTE = "a_0 fixed to 0 (f(0) = 0); the equation leaves the constant term free"


@dataclass(frozen=True)
class FeqSolution:
    """Coefficients a_0..a_{k+1} of the normalized minimal-degree solution.

    ``shifted`` records which equation was solved: False for
    f(x) + x^k = f(x+1), True for f(x) + (x+1)^k = f(x+1).
    """

    k: int
    coeffs: tuple[Fraction, ...]
    shifted: bool

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    @property
    def normalization(self) -> str:
        return NORMALIZATION_NOTE


@lru_cache(maxsize=None)
def solve_monomial(k: int) -> FeqSolution:
    """Solve f(x) + x^k = f(x+1) by back-substitution; degree is k + 1."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    a = [Fraction(0)] * (k + 2)
    a[k + 1] = Fraction(1, k + 1)
    for j in range(k, 0, -1):
        acc = sum(
            (a[l] * binomial(l, j - 1) for l in range(j + 1, k + 2)),
            start=Fraction(0),
        )
        a[j] = -acc / j
    return FeqSolution(k=k, coeffs=tuple(a), shifted=False)


def solve_difference(rhs: Polynomial) -> Polynomial:
    """The unique f with f(x+1) - f(x) = rhs(x) and f(0) = 0.

    Assembled monomial by monomial: the forward difference is linear,
    so f = sum_d c_d * solve_monomial(d) over the terms c_d x^d of rhs.
    """
    out = Polynomial.zero()
    for d, c in enumerate(rhs.coeffs):
        if c != 0:
            out = out + c * solve_monomial(d).polynomial
    return out


def solve_shifted(k: int) -> FeqSolution:
    """Solve f(x) + (x+1)^k = f(x+1) via the generic difference solver."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    f = solve_difference(Polynomial.monomial(k).shift(1))
    coeffs = f.coeffs
    if len(coeffs) != k + 2:
        raise ArithmeticError(
            f"expected a degree-{k + 1} solution, got degree {f.degree}"
        )
    return FeqSolution(k=k, coeffs=coeffs, shifted=True)


def extract_bernoulli(sol: FeqSolution, flavor: Convention) -> list[Fraction]:
    """[b_0, ..., b_k] with b_j = (k+1) a_{k+1-j} / C(k+1, j).

    The monomial solution extracts the minus convention, the shifted
    solution the plus convention; any other pairing is rejected. Only
    the forced prefix j = 0..k is returned: b_{k+1} would be (k+1) a_0,
    and a_0 is fixed by the normalization, not by the equation.
    """
    expected = flavor is Convention.PLUS
    if sol.shifted != expected:
        kind = "shifted" if sol.shifted else "monomial"
        raise ValueError(
            f"a {kind} solution extracts the "
            f"{'plus' if sol.shifted else 'minus'} convention, not {flavor.value}"
        )
    k = sol.k
    return [
        (k + 1) * sol.coeffs[k + 1 - j] / binomial(k + 1, j) for j in range(k + 1)
    ]
