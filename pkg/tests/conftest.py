"""Shared helpers for the test suite."""

from platonic import Family, build
from platonic.qsqrt5 import ONE, ZERO


def chain_diagrams(max_rank=8):
    """Every branch-free diagram up to the given rank."""
    out = [build(Family.A, n) for n in range(1, max_rank + 1)]
    out += [build(Family.B, n) for n in range(2, max_rank + 1)]
    out += [build(Family.C, n) for n in range(2, max_rank + 1)]
    out += [build(Family.H2, 2), build(Family.H3, 3), build(Family.H4, 4),
            build(Family.F4, 4)]
    return out


def all_diagrams(max_rank=8):
    return chain_diagrams(max_rank) + [build(Family.D, n) for n in range(4, max_rank + 1)]


def matmul(x, y):
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in zip(*y))
        for row in x
    )


def transpose(x):
    return tuple(zip(*x))


def reflection_matrix(cartan, i):
    """Matrix of reflection i on weight coordinates: x'_j = x_j - x_i C_ij.

    Identity except in column i, which picks up -C_ij (1-based i).
    """
    n = len(cartan)
    i0 = i - 1
    rows = []
    for j in range(n):
        row = [ONE if j == k else ZERO for k in range(n)]
        row[i0] = row[i0] - cartan[i0][j]
        rows.append(tuple(row))
    return tuple(rows)
