"""Exact integer and rational matrix helpers.

Matrices are tuples of row tuples of Python ints.  Nothing here ever touches
floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

Matrix = Tuple[Tuple[int, ...], ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col) if x and y) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v) if x) for row in a)


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def block(a: Matrix, rows: range, cols: range) -> Matrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


def from_blocks(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    top = tuple(r + s for r, s in zip(tl, tr))
    bottom = tuple(r + s for r, s in zip(bl, br))
    return top + bottom


def det(a: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_unimodular(a: Matrix) -> Matrix:
    """Inverse of an integer matrix with determinant +-1.

    Raises ValueError when the matrix is not invertible over the integers.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    inv = [row[n:] for row in m]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)


def primitive(v: Sequence[Fraction | int]) -> Tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    The first nonzero entry is made positive.
    """
    fr = [Fraction(x) for x in v]
    den = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator), fr, 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    s = 1 if lead > 0 else -1
    return tuple(s * x // g for x in ints)


SparseRow = Dict[int, Fraction]


def rref(rows: Iterable[Dict[int, int | Fraction]], ncols: int) -> Tuple[List[SparseRow], List[int]]:
    """Reduced row echelon form of a sparse rational system.

    Rows are dicts ``column -> coefficient``.  Rows are consumed in the given
    order, so the result is deterministic for a fixed input order.  Returns the
    reduced pivot rows and their pivot columns (sorted).
    """
    pivots: Dict[int, SparseRow] = {}
    for raw in rows:
        row: SparseRow = {c: Fraction(x) for c, x in raw.items() if x}
        # eliminate known pivots, smallest pivot first so fill-in is handled
        while row:
            hit = [c for c in row if c in pivots]
            if not hit:
                break
            c = min(hit)
            f = row[c]
            for k, x in pivots[c].items():
                y = row.get(k, 0) - f * x
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
        if not row:
            continue
        p = min(row)
        lead = row[p]
        row = {k: x / lead for k, x in row.items()}
        # keep existing pivot rows reduced with respect to the new pivot
        for q, prow in pivots.items():
            f = prow.get(p)
            if f:
                for k, x in row.items():
                    y = prow.get(k, 0) - f * x
                    if y:
                        prow[k] = y
                    else:
                        prow.pop(k, None)
        pivots[p] = row
    cols = sorted(pivots)
    if len(cols) > ncols:
        raise ArithmeticError("more pivots than columns")
    return [pivots[c] for c in cols], cols


def nullspace(rows: Iterable[Dict[int, int | Fraction]], ncols: int) -> List[Tuple[int, ...]]:
    """Integer basis (primitive vectors) of the rational nullspace of a sparse system."""
    reduced, pcols = rref(rows, ncols)
    pset = set(pcols)
    basis = []
    for free in range(ncols):
        if free in pset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for prow, p in zip(reduced, pcols):
            v[p] = -prow.get(free, Fraction(0))
        basis.append(primitive(v))
    return basis


def rank(rows: Iterable[Sequence[int]]) -> int:
    dict_rows = [{i: x for i, x in enumerate(r) if x} for r in rows]
    ncols = max((max(r) + 1 for r in dict_rows if r), default=0)
    return len(rref(dict_rows, ncols)[1])
