"""Exact rational row-echelon helpers for basis/span work.

Matrices are lists of rows of Fractions. Pivoting is leftmost-first so
echelon bases are deterministic and reports reproduce byte-for-byte.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: list[Row]) -> int:
    return len(rref(rows)[0])


def in_span(echelon: list[Row], pivots: list[int], vec: Row) -> bool:
    """Membership test against an rref basis."""
    v = list(vec)
    for row, p in zip(echelon, pivots):
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)


def span_equal(rows_a: list[Row], rows_b: list[Row]) -> bool:
    ea, pa = rref(rows_a)
    eb, pb = rref(rows_b)
    return ea == eb and pa == pb


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Deterministic basis of {x : M x = 0}; rows are the equations."""
    ech, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Row] = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, p in zip(ech, pivots):
            v[p] = -row[fc]
        basis.append(v)
    return basis
