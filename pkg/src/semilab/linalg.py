"""Exact linear algebra over the rationals.

Elimination runs on integer rows: every row is scaled to a primitive integer
vector, rows are combined with integer multipliers, and the content (gcd) is
divided out after each step.  Fractions only appear when results are handed
back in normalised form.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple  # tuple of Fraction


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for v in row:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    ints = [int(v * den) for v in row]
    return _primitive(ints)


def echelon(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination.

    Returns primitive integer rows in reduced echelon shape (each pivot column
    is zero outside its pivot row, pivot entries positive) and the pivot
    column of each row.
    """
    M = [r for r in (integer_row(row) for row in rows) if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r]
        if piv[c] < 0:
            piv = [-v for v in piv]
            M[r] = piv
        a = piv[c]
        for i in range(len(M)):
            if i != r:
                b = M[i][c]
                if b:
                    M[i] = _primitive([a * x - b * y for x, y in zip(M[i], piv)])
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form with unit pivots, as Fraction tuples."""
    M, pivots = echelon(rows, ncols)
    out = []
    for row, c in zip(M, pivots):
        a = row[c]
        out.append(tuple(Fraction(v, a) for v in row))
    return out, pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, c in zip(R, pivots):
            v[c] = -row[free]
        basis.append(tuple(v))
    return basis


def left_nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{y : y M = 0}``."""
    nrows = len(rows)
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return nullspace(cols, nrows)


def reduce_vector(v: Sequence, basis: Sequence[Vector], pivots: Sequence[int]) -> list[Fraction]:
    """Remainder of ``v`` modulo the span of an RREF basis (pivot entries zeroed)."""
    out = [Fraction(x) for x in v]
    for row, c in zip(basis, pivots):
        a = out[c]
        if a:
            out = [x - a * y for x, y in zip(out, row)]
    return out


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
