"""Exact Gaussian elimination over the field of q,t-fractions.

Matrices are lists of row lists of QTFraction.  Sizes stay tiny (at most a
few dozen rows), so straightforward reduced row echelon form with
incremental fraction reduction is fast enough.
"""

from __future__ import annotations

from typing import List

from .qt_coeff import QTFraction

Matrix = List[List[QTFraction]]


class SingularSystemError(Exception):
    """Linear system without the expected unique solution."""


def _rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    rows = [row[:] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = QTFraction.one() / rows[r][c]
        rows[r] = [entry * inv for entry in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                factor = rows[i][c]
                rows[i] = [
                    a - factor * b if not b.is_zero else a
                    for a, b in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(matrix: Matrix) -> List[List[QTFraction]]:
    """Basis of the right nullspace."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rref, pivots = _rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [QTFraction.zero()] * ncols
        vec[f] = QTFraction.one()
        for r, p in enumerate(pivots):
            vec[p] = -rref[r][f]
        basis.append(vec)
    return basis


def solve(matrix: Matrix, rhs: List[QTFraction]) -> List[QTFraction]:
    """Unique solution of a square (or overdetermined consistent) system."""
    if not matrix:
        if any(not b.is_zero for b in rhs):
            raise SingularSystemError("inconsistent empty system")
        return []
    ncols = len(matrix[0])
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    rref, pivots = _rref(aug)
    if ncols in pivots:
        raise SingularSystemError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SingularSystemError("underdetermined linear system")
    solution = [QTFraction.zero()] * ncols
    for r, p in enumerate(pivots):
        solution[p] = rref[r][ncols]
    return solution
