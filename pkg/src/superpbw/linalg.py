"""Exact linear algebra over Q: fraction-free elimination, null spaces, RREF."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Vector = list  # list[Fraction]


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(c) for c in row]
        den = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * den) for c in row])
    return out


def echelon_fraction_free(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Bareiss forward elimination on an integer copy of ``rows``.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    """
    m = [r for r in _integer_rows(rows) if any(r)]
    for r in m:
        if len(r) != ncols:
            raise ValueError("row length does not match column count")
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        prow = m[r]
        for i in range(r + 1, len(m)):
            row = m[i]
            f = row[c]
            if f:
                for k in range(c + 1, ncols):
                    num = piv * row[k] - f * prow[k]
                    q, rem = divmod(num, prev)
                    assert rem == 0
                    row[k] = q
            else:
                for k in range(c + 1, ncols):
                    q, rem = divmod(piv * row[k], prev)
                    assert rem == 0
                    row[k] = q
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Reduced row-echelon form (nonzero rows only), pivots normalised to 1."""
    m = [[Fraction(c) for c in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]]


def kernel(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Null-space basis of the matrix with the given rows, in canonical RREF.

    Elimination is fraction-free; only the back substitution and the final
    canonicalisation touch Fractions.
    """
    ech, pivots = echelon_fraction_free(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in reversed(list(zip(ech, pivots))):
            s = sum((row[k] * x[k] for k in range(pc + 1, ncols) if row[k]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    return rref(basis, ncols)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(echelon_fraction_free(rows, ncols)[1])


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> bool:
    return rref(a, ncols) == rref(b, ncols)


def in_span(v: Sequence, basis: Sequence[Sequence], ncols: int) -> bool:
    return rank(list(basis) + [v], ncols) == rank(basis, ncols)


class CoordinateSolver:
    """Coordinates of vectors with respect to a fixed linearly independent family.

    An invertible square block of the family matrix is chosen once, so each
    lookup is a matrix-vector product plus a membership check.
    """

    def __init__(self, family: Sequence[Sequence]):
        self.family = [[Fraction(c) for c in v] for v in family]
        k = len(self.family)
        self.length = len(self.family[0]) if k else 0
        # columns of M are family vectors; rows are ambient coordinates
        ambient_rows = [[v[i] for v in self.family] for i in range(self.length)]
        aug = [row + [Fraction(int(i == j)) for j in range(self.length)] for i, row in enumerate(ambient_rows)]
        # left-inverse: RREF of [M | I] gives pivot ambient coordinates
        red = rref(aug, k)
        if len(red) < k or any(red[i][i] != 1 for i in range(k)):
            raise ValueError("family is linearly dependent")
        self._left = [[(j, c) for j, c in enumerate(row[k:]) if c] for row in red[:k]]
        self._sparse_family = [[(i, c) for i, c in enumerate(v) if c] for v in self.family]

    def coords(self, v: Sequence) -> list[Fraction]:
        v = [Fraction(c) for c in v]
        x = [sum((c * v[j] for j, c in row if v[j]), Fraction(0)) for row in self._left]
        back = [Fraction(0)] * self.length
        for xi, f in zip(x, self._sparse_family):
            if xi:
                for i, c in f:
                    back[i] += xi * c
        if back != v:
            raise ValueError("vector is not in the span of the family")
        return x
