"""Exact LP feasibility by integer-preserving simplex.

Solves ``A x = b, x >= 0`` over the rationals.  The tableau is kept as
integers and updated with Edmonds' fraction-free pivot

    t[i][j] <- (p * t[i][j] - t[i][c] * t[r][j]) // prev_pivot

which divides exactly, so no gcd work happens inside the pivot loop.  The
true tableau is ``t / prev_pivot`` and ``prev_pivot`` stays positive because
every simplex pivot element is positive.  Bland's rule guarantees
termination.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_row(row: Sequence[Fraction], rhs: Fraction) -> tuple[list[int], int]:
    scale = 1
    for v in row:
        scale = lcm(scale, Fraction(v).denominator)
    scale = lcm(scale, Fraction(rhs).denominator)
    ints = [int(Fraction(v) * scale) for v in row]
    r = int(Fraction(rhs) * scale)
    if r < 0:
        ints = [-v for v in ints]
        r = -r
    return ints, r


def find_nonnegative_solution(A: Sequence[Sequence[Fraction]],
                              b: Sequence[Fraction]) -> list[Fraction] | None:
    """Return some ``x >= 0`` with ``A x = b``, or None if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    rows = [_integer_row(A[i], b[i]) for i in range(m)]
    width = n + m + 1  # originals, artificials, rhs
    t = []
    for i, (ints, r) in enumerate(rows):
        row = ints + [0] * m + [r]
        row[n + i] = 1
        t.append(row)
    # phase-one objective: minimise the sum of artificials
    cost = [0] * width
    for row in t:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    t.append(cost)
    basis = [n + i for i in range(m)]
    det = 1

    while True:
        obj = t[m]
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            a = t[i][enter]
            if a <= 0:
                continue
            if leave is None:
                leave = i
                continue
            # compare t[i][rhs]/a with t[leave][rhs]/t[leave][enter]
            lhs = t[i][-1] * t[leave][enter]
            rhs = t[leave][-1] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                leave = i
        if leave is None:  # cannot happen in phase one, objective is bounded below
            break
        _pivot(t, leave, enter, det)
        det = t[leave][enter]
        basis[leave] = enter

    if t[m][-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = Fraction(t[i][-1], det)
    return x


def _pivot(t: list[list[int]], r: int, c: int, det: int) -> None:
    prow = t[r]
    p = prow[c]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(t):
        if i == r:
            continue
        f = row[c]
        if f == 0:
            if p != det:
                for j in range(len(row)):
                    if row[j]:
                        row[j] = row[j] * p // det
            continue
        new = [v * p for v in row] if p != 1 else row[:]
        for j in nz:
            new[j] -= f * prow[j]
        if det != 1:
            new = [v // det for v in new]
        t[i] = new


def check_nonnegative_solution(A, b, x) -> bool:
    if any(v < 0 for v in x):
        return False
    return all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))
