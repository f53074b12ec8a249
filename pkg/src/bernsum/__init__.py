"""Exact Bernoulli numbers, Faulhaber power sums, and difference-equation solving.

Everything is computed over arbitrary-precision rationals; no value
ever touches floating point. The package pairs each construction with
an independent route to the same numbers (recurrence vs. generating
function, closed form vs. direct summation, coefficient extraction vs.
the memoized tables) and ships a verification suite that checks the
identities tying them together.
"""

from .bernoulli import (
    BernoulliTable,
    Convention,
    PowerSeries,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_series,
    series_reciprocal,
)
from .exactnum import Rational, binomial, format_rational, parse_rational
from .faulhaber import (
    bernoulli_polynomial,
    faulhaber_poly,
    faulhaber_variant_eval,
    sum_powers_closed,
    sum_powers_naive,
)
from .feqsolver import (
    FeqSolution,
    extract_bernoulli,
    solve_difference,
    solve_monomial,
    solve_shifted,
)
from .identities import (
    Counterexample,
    VerificationReport,
    check_binomial_f_identity,
    check_difference_properties,
    check_extraction_props,
    check_faulhaber,
    check_lemma1,
    check_series_vs_recursion,
    run_all,
)
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "Convention",
    "Counterexample",
    "FeqSolution",
    "Polynomial",
    "PowerSeries",
    "Rational",
    "VerificationReport",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "bernoulli_series",
    "binomial",
    "check_binomial_f_identity",
    "check_difference_properties",
    "check_extraction_props",
    "check_faulhaber",
    "check_lemma1",
    "check_series_vs_recursion",
    "extract_bernoulli",
    "faulhaber_poly",
    "faulhaber_variant_eval",
    "format_rational",
    "parse_rational",
    "run_all",
    "series_reciprocal",
    "solve_difference",
    "solve_monomial",
    "solve_shifted",
    "sum_powers_closed",
    "sum_powers_naive",
    "__version__",
]
