"""Small exact linear algebra over Fraction.

Everything here works on lists of lists of Fractions and never touches
floating point.  Matrices are tiny (segment Gram matrices, candidate
supports), so plain Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError

Matrix = Sequence[Sequence[Fraction]]


def _as_fraction_rows(matrix: Matrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise InputError("matrix must be square")
    return rows


def check_symmetric(matrix: Matrix) -> list[list[Fraction]]:
    rows = _as_fraction_rows(matrix)
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise InputError("matrix must be symmetric")
    return rows


def solve_linear(matrix: Matrix, rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve matrix * x = rhs exactly. Raises InputError when singular."""
    a = _as_fraction_rows(matrix)
    n = len(a)
    if len(rhs) != n:
        raise InputError("rhs length does not match matrix size")
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise InputError("singular matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        b[col] /= inv
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return b


def is_negative_definite(matrix: Matrix) -> bool:
    """Exact negative-definiteness test for a symmetric matrix.

    Runs fraction elimination without row exchanges; the pivots are the
    ratios of consecutive leading principal minors, so the matrix is
    negative definite iff every pivot is negative.  A zero pivot means a
    singular leading minor, which already rules definiteness out.
    """
    a = check_symmetric(matrix)
    n = len(a)
    for col in range(n):
        pivot = a[col][col]
        if pivot == 0:
            return False
        if pivot > 0:
            return False
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / pivot
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return True


def quadratic_form(matrix: Matrix, vec: Sequence[Fraction]) -> Fraction:
    rows = _as_fraction_rows(matrix)
    if len(vec) != len(rows):
        raise InputError("vector length does not match matrix size")
    total = Fraction(0)
    for i, row in enumerate(rows):
        for j, g in enumerate(row):
            if g != 0:
                total += vec[i] * g * vec[j]
    return total
