"""Exact scalar arithmetic: big integers, reduced rationals, binomials.

Integers are plain Python ints (arbitrary precision natively). Rationals
are ``fractions.Fraction``, which keeps every value in canonical form:
gcd(|num|, den) = 1 and den >= 1, with zero stored as 0/1. Nothing in
this package ever passes a value through floating point.

The textual interchange form for a rational is ``num/den`` in lowest
terms with a positive denominator, or bare ``num`` when the denominator
is 1 (``-691/2730``, ``5050``). ``format_rational``/``parse_rational``
define that format for the CLI and all golden comparisons.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["Rational", "binomial", "format_rational", "parse_rational"]

# Canonical rational scalar used across the package.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for n >= 0, exactly.

    Out-of-range k (k < 0 or k > n) gives 0. Uses the multiplicative
    formula with a running exact division, so no factorial ever gets
    materialized.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result * (n - k + i) is divisible by i: result holds C(n-k+i-1, i-1).
        result = result * (n - k + i) // i
    return result


def format_rational(value: Fraction) -> str:
    """Render a rational in the interchange form (``num/den`` or bare ``num``)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the interchange form back into a Fraction.

    Accepts optionally signed integers and ``num/den`` pairs; anything
    else (decimals, exponents, whitespace inside the number) is rejected
    so that values can never sneak in through floating point.
    """
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(match.group(1))
    den_text = match.group(2)
    if den_text is None:
        return Fraction(num)
    den = int(den_text)
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)
