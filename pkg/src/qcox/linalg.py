"""Small exact matrix helpers over int / Fraction (lists of rows)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Mat = List[List[Fraction]]


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(x: Sequence[Sequence], y: Sequence[Sequence]) -> list:
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


def transpose(x: Sequence[Sequence]) -> list:
    return [list(c) for c in zip(*x)]


def add(x, y, sign: int = 1) -> list:
    return [[a + sign * b for a, b in zip(r, s)] for r, s in zip(x, y)]


def frozen(x) -> tuple:
    return tuple(tuple(r) for r in x)


def inverse(x: Sequence[Sequence]) -> Mat:
    """Gauss-Jordan inverse over Q; raises ZeroDivisionError if singular."""
    n = len(x)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(x)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]


def det(x: Sequence[Sequence]) -> Fraction:
    n = len(x)
    m = [[Fraction(v) for v in row] for row in x]
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return out
