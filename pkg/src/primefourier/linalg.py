"""Exact Gaussian elimination over Q(w).

Pivot selection is the first non-zero entry in column order (exact
arithmetic has no conditioning concerns, and a fixed rule keeps results
deterministic); pivots are inverted through the extended-Euclid field
inverse.
"""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycRat, Prime, cycrat_inverse
from .errors import SingularMatrixError


def det_gaussian(p: Prime, matrix: Sequence[Sequence[CycRat]]) -> CycRat:
    """Determinant of a square matrix over Q(w) by elimination; the product
    of the pivots times the row-swap sign."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero), None)
        if piv is None:
            return CycRat.zero(p)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        inv = cycrat_inverse(m[col][col])
        prow = m[col]
        for r in range(col + 1, n):
            lead = m[r][col]
            if lead.is_zero:
                continue
            factor = lead * inv
            row = m[r]
            for j in range(col + 1, n):
                row[j] = row[j] - factor * prow[j]
    det = CycRat.from_rational(p, sign)
    for i in range(n):
        det = det * m[i][i]
    return det


def solve_gaussian(
    p: Prime, matrix: Sequence[Sequence[CycRat]], rhs: Sequence[CycRat]
) -> list[CycRat]:
    """Solve a square system A x = b over Q(w) exactly."""
    n = len(matrix)
    m = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero), None)
        if piv is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        inv = cycrat_inverse(m[col][col])
        prow = m[col]
        for r in range(col + 1, n):
            lead = m[r][col]
            if lead.is_zero:
                continue
            factor = lead * inv
            row = m[r]
            for j in range(col + 1, n + 1):
                row[j] = row[j] - factor * prow[j]
    xs: list[CycRat] = [CycRat.zero(p)] * n
    for i in range(n - 1, -1, -1):
        acc = m[i][n]
        for j in range(i + 1, n):
            acc = acc - m[i][j] * xs[j]
        xs[i] = acc * cycrat_inverse(m[i][i])
    return xs
