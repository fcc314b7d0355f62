"""
Exact Gaussian elimination over Q(A).

Pivot rule: the first row (from the current one down) whose entry in the
pivot column is structurally nonzero. The systems solved here are at most
4x4, so no growth heuristics are applied.
"""
from __future__ import annotations

from typing import Sequence

from app.core.errors import InvalidParamsError, SingularSystemError
from app.exactalg.ratfn import RationalFn, Scalar


def _as_matrix(M: Sequence[Sequence[Scalar]]) -> list[list[RationalFn]]:
    rows = [[RationalFn.coerce(x) for x in row] for row in M]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InvalidParamsError("matrix must be square")
    return rows


def determinant(M: Sequence[Sequence[Scalar]]) -> RationalFn:
    rows = _as_matrix(M)
    n = len(rows)
    det = RationalFn.coerce(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return RationalFn.coerce(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        for r in range(col + 1, n):
            if rows[r][col].is_zero():
                continue
            factor = rows[r][col] / p
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(n)]
    return det


def solve_linear_system(
    M: Sequence[Sequence[Scalar]],
    b: Sequence[Scalar],
) -> tuple[list[RationalFn], RationalFn]:
    """
    Solve M x = b exactly.

    Returns (x, det(M)). Raises SingularSystemError when det(M) = 0.
    """
    rows = _as_matrix(M)
    n = len(rows)
    if len(b) != n:
        raise InvalidParamsError(f"right-hand side has {len(b)} entries, matrix has {n} rows")
    rhs = [RationalFn.coerce(x) for x in b]

    det = RationalFn.coerce(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            raise SingularSystemError(f"singular {n}x{n} system: no pivot in column {col}")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
            det = -det
        p = rows[col][col]
        det = det * p
        for r in range(col + 1, n):
            if rows[r][col].is_zero():
                continue
            factor = rows[r][col] / p
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(n)]
            rhs[r] = rhs[r] - factor * rhs[col]

    x: list[RationalFn] = [RationalFn.coerce(0)] * n
    for r in range(n - 1, -1, -1):
        acc = rhs[r]
        for c in range(r + 1, n):
            if not rows[r][c].is_zero():
                acc = acc - rows[r][c] * x[c]
        x[r] = acc / rows[r][r]
    return x, det


def mat_vec(M: Sequence[Sequence[Scalar]], x: Sequence[Scalar]) -> list[RationalFn]:
    """M x, used for re-substitution checks."""
    out = []
    for row in M:
        acc = RationalFn.coerce(0)
        for a, v in zip(row, x):
            acc = acc + RationalFn.coerce(a) * RationalFn.coerce(v)
        out.append(acc)
    return out
