"""Dense univariate polynomials over exact rationals.

A polynomial is stored as a tuple of Fractions in ascending order:
index i holds the coefficient of x^i. The representation is canonical
(no trailing zero coefficients), so equality is plain tuple equality.
The zero polynomial is the empty tuple and has degree -1.

Degrees in this package stay small (about 60), which is why the dense
layout and the O(d^2) binomial-expansion shift are the right trade.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .exactnum import binomial, format_rational

__all__ = ["Polynomial"]

Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        """The polynomial coeff * x^degree."""
        if degree < 0:
            raise ValueError(f"monomial degree must be >= 0, got {degree}")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i (zero beyond the degree)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at x, by Horner's scheme."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def shift(self, c: Scalar) -> "Polynomial":
        """The polynomial q with q(x) = p(x + c), by binomial expansion.

        Each term a_j (x+c)^j contributes a_j * C(j,i) * c^(j-i) to the
        coefficient of x^i; the degree is preserved.
        """
        c = Fraction(c)
        out = [Fraction(0)] * len(self._coeffs)
        for j, a in enumerate(self._coeffs):
            if a == 0:
                continue
            power = Fraction(1)  # c^(j-i), walking i downward from j
            for i in range(j, -1, -1):
                out[i] += a * binomial(j, i) * power
                power *= c
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        """Formal derivative."""
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def forward_difference(self) -> "Polynomial":
        """Delta p = p(x+1) - p(x); drops the degree by exactly 1."""
        return self.shift(1) - self

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, scalar: Scalar) -> "Polynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Polynomial([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient_strings(self) -> list[str]:
        """Ascending coefficient list in the rational interchange form."""
        return [format_rational(c) for c in self._coeffs]

    def __str__(self) -> str:
        """Human form, highest degree first: ``1/2*x^2 - 1/2*x``."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = format_rational(mag)
            else:
                x_part = "x" if i == 1 else f"x^{i}"
                body = x_part if mag == 1 else f"{format_rational(mag)}*{x_part}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(self.coefficient_strings())}])"
