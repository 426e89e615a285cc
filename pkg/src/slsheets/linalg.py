"""Row reduction over Q.

Vectors are lists of Fractions. Everything here is exact Gaussian
elimination; no pivoting strategy is needed since there is no rounding.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rref(rows: Iterable[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                m[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


class EchelonSpan:
    """Incrementally maintained span of vectors, kept in reduced form.

    ``add`` returns True when the vector enlarged the span.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[Fraction]] = {}  # pivot column -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for c, row in self.rows.items():
            f = w[c]
            if f != 0:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[Fraction]) -> bool:
        w = self.reduce(v)
        c = next((i for i, a in enumerate(w) if a != 0), None)
        if c is None:
            return False
        inv = 1 / w[c]
        w = [a * inv for a in w]
        for pc, row in self.rows.items():
            f = row[c]
            if f != 0:
                self.rows[pc] = [a - f * b for a, b in zip(row, w)]
        self.rows[c] = w
        return True
