"""Exact rational linear algebra and LP feasibility over ``fractions.Fraction``."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = Sequence[int | Fraction]


def row_reduce(rows: Sequence[Vector]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return len(row_reduce(vectors)[1])


def determinant(rows: Sequence[Vector]) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def solve_independent(columns: Sequence[Vector], target: Vector) -> list[Fraction] | None:
    """Unique coefficients ``x`` with ``sum x_i columns[i] = target``, or None.

    ``columns`` must be linearly independent.
    """
    dim = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(dim)]
    red, pivots = row_reduce(aug)
    if k in pivots:
        return None
    assert pivots == list(range(k)), "columns are not independent"
    return [red[i][k] for i in range(k)]


def nonnegative_solution(columns: Sequence[Vector], target: Vector) -> list[Fraction] | None:
    """Find ``x >= 0`` with ``sum x_j columns[j] = target`` or return None.

    Phase-one simplex with Bland's rule, exact rationals.
    """
    m, n = len(target), len(columns)
    rows = []
    for i in range(m):
        row = [Fraction(columns[j][i]) for j in range(n)]
        rhs = Fraction(target[i])
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    nvars = n + m
    basis = list(range(n, n + m))
    # reduced costs for minimising the sum of artificials
    cost = [-sum(rows[i][j] for i in range(m)) if j < n else Fraction(0) for j in range(nvars)]
    while True:
        enter = next((j for j in range(nvars) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: phase one is bounded below
            raise AssertionError("unbounded phase-one LP")
        piv = best[1]
        a = rows[piv][enter]
        rows[piv] = [x / a for x in rows[piv]]
        for i in range(m):
            if i != piv and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv])]
        f = cost[enter]
        cost = [c - f * y for c, y in zip(cost, rows[piv][:nvars])]
        basis[piv] = enter
    x = [Fraction(0)] * nvars
    for i, b in enumerate(basis):
        x[b] = rows[i][-1]
    if any(x[j] != 0 for j in range(n, nvars)):
        return None
    return x[:n]
