"""Shared strategies, oracles, and fixtures for the test suite."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from bernsum import bernoulli
from bernsum.poly import Polynomial


def rationals(max_magnitude: int = 10**6) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(min_value=-max_magnitude, max_value=max_magnitude),
        st.integers(min_value=1, max_value=max_magnitude),
    )


def polynomials(max_degree: int = 12, max_magnitude: int = 100) -> st.SearchStrategy[Polynomial]:
    return st.builds(
        Polynomial,
        st.lists(rationals(max_magnitude), min_size=0, max_size=max_degree + 1),
    )


@lru_cache(maxsize=None)
def pascal_triangle(n_max: int) -> tuple[tuple[int, ...], ...]:
    """Rows 0..n_max of Pascal's triangle by pure addition (test oracle)."""
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append(
            (1, *(prev[k - 1] + prev[k] for k in range(1, n)), 1)
        )
    return tuple(rows)


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """[B+_0, ..., B+_n] by the Akiyama-Tanigawa triangle.

    Independent oracle: shares no code or recurrence shape with the
    library's binomial-sum route.
    """
    work = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        work[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            work[j - 1] = j * (work[j - 1] - work[j])
        out.append(work[0])
    return out


def linear_system_infeasible(rows: list[list], rhs: list) -> bool:
    """True iff rows * a = rhs has no solution, by exact Gaussian elimination."""
    matrix = [
        [Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)
    ]
    n_rows = len(matrix)
    n_cols = len(rows[0]) if rows else 0
    pivot = 0
    for col in range(n_cols):
        src = next((r for r in range(pivot, n_rows) if matrix[r][col] != 0), None)
        if src is None:
            continue
        matrix[pivot], matrix[src] = matrix[src], matrix[pivot]
        scale = matrix[pivot][col]
        matrix[pivot] = [v / scale for v in matrix[pivot]]
        for r in range(n_rows):
            if r != pivot and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[pivot])]
        pivot += 1
        if pivot == n_rows:
            break
    return any(
        all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in matrix
    )


def _swap_in_corrupted_table(monkeypatch, convention, index, delta):
    table = bernoulli.BernoulliTable(convention)
    table.values(20)  # fill before corrupting so later entries stay honest
    table._values[index] += delta
    monkeypatch.setitem(bernoulli._TABLES, convention, table)
    return index


@pytest.fixture
def corrupt_minus_table(monkeypatch):
    """Swap in a minus-convention table whose entry 12 is off by 1/7.

    Returns the corrupted index. The shared table is restored afterwards.
    """
    return _swap_in_corrupted_table(
        monkeypatch, bernoulli.Convention.MINUS, 12, Fraction(1, 7)
    )


@pytest.fixture
def corrupt_plus_table(monkeypatch):
    """Plus-convention table with entry 12 off by 1/7 (breaks integrality)."""
    return _swap_in_corrupted_table(
        monkeypatch, bernoulli.Convention.PLUS, 12, Fraction(1, 7)
    )


@pytest.fixture
def corrupt_plus_table_integer(monkeypatch):
    """Plus-convention table with entry 12 off by 1 (keeps sums integral)."""
    return _swap_in_corrupted_table(
        monkeypatch, bernoulli.Convention.PLUS, 12, Fraction(1)
    )
