"""Exact Gaussian elimination over any field (rationals, GaussRational).

Matrices are lists of rows.  Pivots are always taken in column order, using
the first row (from the top) with a nonzero entry, so every result is a
deterministic function of the input.
"""
from __future__ import annotations

from typing import Any, List, Optional, Sequence, Tuple

from .scalars import Rat

Matrix = List[List[Any]]


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in rows]


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form and pivot columns.  Zero rows are dropped."""
    m = _copy(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], int) else Rat(1, m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    """Basis of ``{v : A v = 0}``, one vector per free column (free entry 1)."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one, zero = Rat(1), Rat(0)
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_particular(a: Sequence[Sequence], b: Sequence) -> Optional[List[Any]]:
    """One solution of ``A x = b`` with every free variable set to 0, or None."""
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Rat(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return all(t == 0 for t in v)
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def identity(n: int) -> Matrix:
    return [[Rat(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Rat(0)) for col in bt] for row in a]


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Tuple[Any, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Rat(0)) for row in m)


def det(m: Sequence[Sequence]):
    """Determinant by elimination."""
    a = _copy(m)
    n = len(a)
    sign = 1
    result = Rat(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Rat(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        result = result * p
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result * sign


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + ident for row, ident in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def columns_to_matrix(cols: Sequence[Sequence]) -> Matrix:
    """Matrix whose columns are the given vectors."""
    return transpose(cols)
