"""Small exact linear algebra helpers: dense rational matrices and a sparse
incremental row-echelon rank tracker.

Matrices are tuples of tuples of rationals.  Everything is fraction-free
where it matters and exact everywhere.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

from .polyring import ONE, QQ, ZERO

Matrix = tuple


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(QQ(e) for e in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt)
        for row in a
    )


def mat_vec(m: Matrix, v: Sequence) -> tuple:
    return tuple(sum((x * QQ(y) for x, y in zip(row, v)), ZERO) for row in m)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    rows = [tuple(row) + (ZERO,) * nb for row in a]
    rows += [(ZERO,) * na + tuple(row) for row in b]
    return tuple(rows)


def mat_det(m: Matrix):
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(m)
    a = [list(row) for row in m]
    det = ONE
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def mat_inv(m: Matrix) -> Matrix:
    n = len(m)
    a = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


class RowEchelon:
    """Incremental rank of sparse rational rows keyed by hashable columns.

    Rows are dicts column->coefficient.  add() reduces against stored pivots
    and returns True when the row enlarges the span.  Pivot choice is the
    maximal column key, so feeding rows whose keys are monomial-order keys
    keeps the structure triangular in that order.
    """

    def __init__(self):
        self.pivots: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for k, v in piv.items():
                s = row.get(k, ZERO) - f * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        red = self.reduce(row)
        if not red:
            return False
        lead = max(red)
        lc = red[lead]
        self.pivots[lead] = {k: v / lc for k, v in red.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank_of_rows(rows: Iterable[dict]) -> int:
    ech = RowEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank
