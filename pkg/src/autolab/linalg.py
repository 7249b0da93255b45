"""Exact linear algebra over the rationals.

Independence tests use fraction-free integer elimination: rational rows are
scaled to primitive integer rows, and every combination step is followed by
division by the row content, so entries stay small.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np


def integer_row(values: Iterable) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same line)."""
    vals = [Fraction(v) for v in values]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    row = [int(v * den) for v in vals]
    return _primitive(row)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = [v // g for v in row]
    return row


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of integer row vectors."""

    def __init__(self, length: int):
        self.length = length
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list[int]:
        v = integer_row(vec) if any(isinstance(x, Fraction) for x in vec) else [int(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                a = row[p]
                v = [a * x - c * y for x, y in zip(v, row)]
                v = _primitive(v)
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert ``vec`` if it is independent of the basis; report whether it was."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        if v[p] < 0:
            v = [-x for x in v]
        for i, (row, q) in enumerate(zip(self.rows, self.pivots)):
            c = row[p]
            if c:
                self.rows[i] = _primitive([v[p] * x - c * y for x, y in zip(row, v)])
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))


def rank(rows: Iterable[Sequence]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    basis = EchelonBasis(len(rows[0]))
    return sum(basis.add(r) for r in rows)


def exact_matrix(rows: Iterable[Iterable]) -> np.ndarray:
    """Object-dtype array holding Python ints or Fractions."""
    return np.array([[x for x in r] for r in rows], dtype=object)


def zeros(n: int, m: int | None = None) -> np.ndarray:
    return np.zeros((n, n if m is None else m), dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = 1
    return out


def det(matrix) -> Fraction:
    """Determinant by Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return result
