"""Deterministic verification sweeps for the package's core identities.

Each check sweeps a parameter range in a fixed order and returns a
structured report instead of raising, so a caller can run the whole
suite and summarize. A failing report always carries the first
counterexample found, with both sides rendered in the canonical
textual formats so failures are diffable.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .bernoulli import (
    Convention,
    bernoulli_numbers,
    bernoulli_series,
)
from .exactnum import binomial, format_rational
from .faulhaber import (
    bernoulli_polynomial,
    faulhaber_poly,
    faulhaber_variant_eval,
    sum_powers_closed,
    sum_powers_naive,
)
from .feqsolver import extract_bernoulli, solve_monomial, solve_shifted
from .poly import Polynomial

__all__ = [
    "Counterexample",
    "VerificationReport",
    "check_lemma1",
    "check_faulhaber",
    "check_difference_properties",
    "check_binomial_f_identity",
    "check_extraction_props",
    "check_series_vs_recursion",
    "run_all",
    "DEFAULT_RANGES",
]

# Default sweep sizes: full coverage at a seconds-scale runtime.
DEFAULT_RANGES = {"m_max": 60, "n_max": 200, "p_max": 25, "k_max": 50, "order": 60}


@dataclass(frozen=True)
class Counterexample:
    parameters: str
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    parameter_range: str
    status: str  # "pass" | "fail"
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status is 'fail' exactly when a counterexample is present")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def render(self) -> str:
        """One summary line, plus the counterexample block on failure."""
        line = f"{'PASS' if self.passed else 'FAIL'} {self.identity_name} {self.parameter_range}"
        if self.counterexample is None:
            return line
        ce = self.counterexample
        return "\n".join(
            [line, f"  at:  {ce.parameters}", f"  lhs: {ce.lhs}", f"  rhs: {ce.rhs}"]
        )

    def to_doc(self) -> dict:
        doc = asdict(self)
        return doc


def _passed(name: str, rng: str) -> VerificationReport:
    return VerificationReport(identity_name=name, parameter_range=rng, status="pass")


def _failed(name: str, rng: str, parameters: str, lhs: str, rhs: str) -> VerificationReport:
    return VerificationReport(
        identity_name=name,
        parameter_range=rng,
        status="fail",
        counterexample=Counterexample(parameters=parameters, lhs=lhs, rhs=rhs),
    )


def check_lemma1(m_max: int = DEFAULT_RANGES["m_max"]) -> VerificationReport:
    """Binomial-sum recurrences: the memoized tables must satisfy, per m,

        sum_{k=0}^{m} C(m+1, k) B-_k = 1 if m == 0 else 0
        sum_{k=0}^{m} C(m+1, k) B+_k = m + 1

    Since the tables are built by solving these for the top term, this
    is an integrity check of the stored values.
    """
    name, rng = "lemma1", f"m = 0..{m_max}, both conventions"
    for conv in Convention:
        values = bernoulli_numbers(conv, m_max)
        for m in range(m_max + 1):
            lhs = sum(
                (binomial(m + 1, k) * values[k] for k in range(m + 1)),
                start=Fraction(0),
            )
            if conv is Convention.MINUS:
                rhs = Fraction(1 if m == 0 else 0)
            else:
                rhs = Fraction(m + 1)
            if lhs != rhs:
                return _failed(
                    name,
                    rng,
                    f"convention={conv.value}, m={m}",
                    format_rational(lhs),
                    format_rational(rhs),
                )
    return _passed(name, rng)


def check_faulhaber(
    n_max: int = DEFAULT_RANGES["n_max"],
    p_max: int = DEFAULT_RANGES["p_max"],
    variant: str = "eq2",
) -> VerificationReport:
    """Closed-form power sums against direct summation on the full grid.

    variant "eq2" checks sum_powers_closed, "eq7" checks
    faulhaber_variant_eval (whose sweep starts at p = 1).
    """
    if variant not in ("eq2", "eq7"):
        raise ValueError(f"variant must be 'eq2' or 'eq7', got {variant!r}")
    name = f"faulhaber-{variant}"
    p_lo = 0 if variant == "eq2" else 1
    rng = f"n = 0..{n_max}, p = {p_lo}..{p_max}"
    closed = sum_powers_closed if variant == "eq2" else faulhaber_variant_eval
    for p in range(p_lo, p_max + 1):
        for n in range(n_max + 1):
            lhs = closed(n, p)
            rhs = sum_powers_naive(n, p)
            if lhs != rhs:
                return _failed(name, rng, f"n={n}, p={p}", str(lhs), str(rhs))
    return _passed(name, rng)


def check_difference_properties(k_max: int = DEFAULT_RANGES["k_max"]) -> VerificationReport:
    """Forward-difference identities, as exact polynomial equalities:

        f_k(x+1) - f_k(x) = x^k          (minus-convention power-sum poly)
        g_k(x+1) - g_k(x) = (x+1)^k      (plus-convention power-sum poly)
        B_k(x+1) - B_k(x) = k x^(k-1)    (Bernoulli polynomial, k >= 1)
    """
    name, rng = "differences", f"k = 0..{k_max}"

    def poly_ce(label: str, k: int, lhs: Polynomial, rhs: Polynomial) -> VerificationReport:
        return _failed(
            name,
            rng,
            f"identity={label}, k={k}",
            f"[{', '.join(lhs.coefficient_strings())}]",
            f"[{', '.join(rhs.coefficient_strings())}]",
        )

    for k in range(k_max + 1):
        lhs = faulhaber_poly(k, Convention.MINUS).forward_difference()
        rhs = Polynomial.monomial(k)
        if lhs != rhs:
            return poly_ce("delta f_k = x^k", k, lhs, rhs)

        lhs = faulhaber_poly(k, Convention.PLUS).forward_difference()
        rhs = Polynomial.monomial(k).shift(1)
        if lhs != rhs:
            return poly_ce("delta g_k = (x+1)^k", k, lhs, rhs)

        if k >= 1:
            lhs = bernoulli_polynomial(k).forward_difference()
            rhs = Polynomial.monomial(k - 1, k)
            if lhs != rhs:
                return poly_ce("delta B_k = k*x^(k-1)", k, lhs, rhs)
    return _passed(name, rng)


def check_binomial_f_identity(k_max: int = DEFAULT_RANGES["k_max"]) -> VerificationReport:
    """sum_{i=0}^{k-1} C(k, i) f_i(x) = x^k for k >= 1, coefficient-exact."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    name, rng = "binomial-identity", f"k = 1..{k_max}"
    f_polys = [faulhaber_poly(i, Convention.MINUS) for i in range(k_max)]
    for k in range(1, k_max + 1):
        acc = Polynomial.zero()
        for i in range(k):
            acc = acc + binomial(k, i) * f_polys[i]
        rhs = Polynomial.monomial(k)
        if acc != rhs:
            return _failed(
                name,
                rng,
                f"k={k}",
                f"[{', '.join(acc.coefficient_strings())}]",
                f"[{', '.join(rhs.coefficient_strings())}]",
            )
    return _passed(name, rng)


def check_extraction_props(k_max: int = DEFAULT_RANGES["k_max"]) -> VerificationReport:
    """Bernoulli numbers recovered from both solver routes match the tables.

    For each k, b_j = (k+1) a_{k+1-j} / C(k+1, j) on the monomial
    solution must equal B-_j, and on the shifted solution B+_j, for
    j = 0..k.
    """
    name, rng = "extraction", f"k = 0..{k_max}, j = 0..k, both conventions"
    for conv, solve in ((Convention.MINUS, solve_monomial), (Convention.PLUS, solve_shifted)):
        expected = bernoulli_numbers(conv, k_max)
        for k in range(k_max + 1):
            extracted = extract_bernoulli(solve(k), conv)
            for j in range(k + 1):
                if extracted[j] != expected[j]:
                    return _failed(
                        name,
                        rng,
                        f"convention={conv.value}, k={k}, j={j}",
                        format_rational(extracted[j]),
                        format_rational(expected[j]),
                    )
    return _passed(name, rng)


def check_series_vs_recursion(order: int = DEFAULT_RANGES["order"]) -> VerificationReport:
    """Generating-function coefficients against the recurrence tables."""
    name, rng = "series", f"j = 0..{order}, both conventions"
    for conv in Convention:
        from_series = bernoulli_series(conv, order)
        from_recursion = bernoulli_numbers(conv, order)
        for j in range(order + 1):
            if from_series[j] != from_recursion[j]:
                return _failed(
                    name,
                    rng,
                    f"convention={conv.value}, j={j}",
                    format_rational(from_series[j]),
                    format_rational(from_recursion[j]),
                )
    return _passed(name, rng)


def run_all(
    m_max: int = DEFAULT_RANGES["m_max"],
    n_max: int = DEFAULT_RANGES["n_max"],
    p_max: int = DEFAULT_RANGES["p_max"],
    k_max: int = DEFAULT_RANGES["k_max"],
    order: int = DEFAULT_RANGES["order"],
) -> list[VerificationReport]:
    """Every check at the given ranges, in a fixed order."""
    return [
        check_lemma1(m_max),
        check_faulhaber(n_max, p_max, "eq2"),
        check_faulhaber(n_max, p_max, "eq7"),
        check_difference_properties(k_max),
        check_binomial_f_identity(max(k_max, 1)),
        check_extraction_props(k_max),
        check_series_vs_recursion(order),
    ]
