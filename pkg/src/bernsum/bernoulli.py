"""Bernoulli numbers of both sign conventions, by two independent routes.

The production route solves the binomial-sum recurrences for the top
term and memoizes the results:

    sum_{k=0}^{m} C(m+1, k) B-_k = 1 if m == 0 else 0
    sum_{k=0}^{m} C(m+1, k) B+_k = m + 1

so B_m = (rhs(m) - sum_{k<m} C(m+1,k) B_k) / (m+1). The two conventions
agree everywhere except index 1, where B-_1 = -1/2 and B+_1 = +1/2.

The second route expands the generating functions x/(e^x - 1) and
x/(1 - e^{-x}) as truncated power series and reads B_j off as j! times
the j-th coefficient. It shares no code with the recurrence and exists
so the two can be checked against each other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactnum import binomial

__all__ = [
    "Convention",
    "BernoulliTable",
    "PowerSeries",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_series",
    "series_reciprocal",
]


class Convention(Enum):
    """Sign convention for index 1: MINUS has B_1 = -1/2, PLUS has +1/2."""

    MINUS = "minus"
    PLUS = "plus"


class BernoulliTable:
    """Memoized Bernoulli numbers for one convention.

    The table grows densely from index 0; each new entry needs all of
    its predecessors anyway. A single lock around growth keeps the
    entries consistent under concurrent use (each is computed once, and
    readers never see a partially built entry).
    """

    def __init__(self, convention: Convention):
        self.convention = convention
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def value(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {m}")
        with self._lock:
            self._extend(m)
            return self._values[m]

    def values(self, upto: int) -> list[Fraction]:
        """[B_0, ..., B_upto] as a fresh list."""
        if upto < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {upto}")
        with self._lock:
            self._extend(upto)
            return self._values[: upto + 1]

    def _extend(self, m: int) -> None:
        while len(self._values) <= m:
            j = len(self._values)  # j >= 1: index 0 is seeded
            rhs = Fraction(j + 1) if self.convention is Convention.PLUS else Fraction(0)
            acc = sum(
                (binomial(j + 1, i) * self._values[i] for i in range(j)),
                start=Fraction(0),
            )
            self._values.append((rhs - acc) / (j + 1))


_TABLES = {conv: BernoulliTable(conv) for conv in Convention}


def bernoulli_number(conv: Convention, m: int) -> Fraction:
    """B_m for the requested convention, via the shared memo table."""
    return _TABLES[conv].value(m)


def bernoulli_numbers(conv: Convention, upto: int) -> list[Fraction]:
    """[B_0, ..., B_upto] for the requested convention."""
    return _TABLES[conv].values(upto)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated formal power series: coeffs[i] is the coefficient of x^i.

    The truncation order is len(coeffs) - 1 and is explicit in every
    result: binary operations truncate to the smaller input order.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def add(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def mul(self, other: "PowerSeries") -> "PowerSeries":
        """Cauchy product, truncated to the smaller order."""
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))


def series_reciprocal(s: PowerSeries) -> PowerSeries:
    """r with s * r = 1 + O(x^(order+1)).

    Triangular recurrence: r_0 = 1/s_0, r_n = -(sum_{i=1..n} s_i r_{n-i}) / s_0.
    """
    if s.coeffs[0] == 0:
        raise ValueError("series with zero constant term has no reciprocal")
    inv0 = 1 / s.coeffs[0]
    out = [inv0]
    for n in range(1, s.order + 1):
        acc = sum(
            (s.coeffs[i] * out[n - i] for i in range(1, n + 1)),
            start=Fraction(0),
        )
        out.append(-acc * inv0)
    return PowerSeries(tuple(out))


def bernoulli_series(conv: Convention, order: int) -> list[Fraction]:
    """[B_0, ..., B_order] read off the generating function.

    x/(e^x - 1) (minus) and x/(1 - e^{-x}) (plus) are computed as the
    reciprocal of (e^x - 1)/x resp. (1 - e^{-x})/x, whose i-th
    coefficient is (+-1)^i / (i+1)!. B_j is then j! times the j-th
    coefficient of the reciprocal.
    """
    if order < 0:
        raise ValueError(f"series order must be >= 0, got {order}")
    sign = -1 if conv is Convention.PLUS else 1
    base = []
    factorial = 1  # (i+1)! built incrementally
    for i in range(order + 1):
        factorial *= i + 1
        base.append(Fraction(sign**i, factorial))
    recip = series_reciprocal(PowerSeries(tuple(base)))
    values = []
    factorial = 1  # j!
    for j, c in enumerate(recip.coeffs):
        if j > 0:
            factorial *= j
        values.append(factorial * c)
    return values
