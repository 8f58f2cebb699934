"""Independent oracles used by the tests, kept deliberately separate from
the package implementations they check."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from homcoh.exact import Matrix


def bareiss_rank(m: Matrix) -> int:
    """Fraction-free elimination rank, independent of the package rref."""
    rows = []
    for i in range(m.rows):
        den_lcm = 1
        for x in m.row(i):
            den_lcm = den_lcm * x.denominator // gcd(den_lcm, x.denominator)
        rows.append([int(x * den_lcm) for x in m.row(i)])
    nr, nc = len(rows), m.cols
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        pivot = -1
        for i in range(r, nr):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                rows[i][j] = (pv * rows[i][j] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = pv
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def frac(x) -> Fraction:
    return Fraction(x)
