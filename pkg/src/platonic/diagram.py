"""Coxeter-Dynkin diagrams of the finite reflection groups used here.

Supported families: the chains A_n, B_n, C_n (n >= 2), F4 and the
pentagonal chains H2, H3, H4, plus the forked family D_n (n >= 4), which
is carried only for its group order and root count.  Nodes are numbered
1..n left to right as the diagrams are conventionally drawn; an absent
edge means the two mirrors commute (label 2).

The module derives everything combinatorial and metric from a diagram:
Cartan matrix, Gram matrix of the fundamental weights, group order, root
count, and the classification of parabolic subgroups read off node
subsets.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cache

from .qsqrt5 import GOLDEN, ONE, QSqrt5, ZERO

MatrixQ = tuple[tuple[QSqrt5, ...], ...]

_HALF = Fraction(1, 2)


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    F4 = "F4"
    H2 = "H2"
    H3 = "H3"
    H4 = "H4"


class DiagramError(ValueError):
    """Raised for invalid family/rank combinations or unknown names."""


@dataclass(frozen=True)
class Diagram:
    """A Coxeter-Dynkin diagram: family, rank and labelled edges.

    ``edges`` holds triples ``(i, j, m)`` with ``i < j`` and label
    ``m in {3, 4, 5}``; every unlisted pair has label 2.
    """

    family: Family
    rank: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def name(self) -> str:
        if self.family in (Family.F4, Family.H2, Family.H3, Family.H4):
            return self.family.value
        return f"{self.family.value}{self.rank}"

    @property
    def nodes(self) -> range:
        """Node indices 1..rank."""
        return range(1, self.rank + 1)

    def label(self, i: int, j: int) -> int:
        if i == j:
            return 1
        key = (i, j) if i < j else (j, i)
        for a, b, m in self.edges:
            if (a, b) == key:
                return m
        return 2

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for a, b, _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return tuple(sorted(out))

    def __str__(self) -> str:
        return self.name


_RANK_RULES = {
    Family.A: (1, None),
    Family.B: (2, None),
    Family.C: (2, None),
    Family.D: (4, None),
    Family.F4: (4, 4),
    Family.H2: (2, 2),
    Family.H3: (3, 3),
    Family.H4: (4, 4),
}


@cache
def build(family: Family, rank: int) -> Diagram:
    """Construct the diagram of the given family and rank.

    Raises DiagramError when the rank is not admissible for the family.
    """
    lo, hi = _RANK_RULES[family]
    if rank < lo or (hi is not None and rank != hi):
        raise DiagramError(f"invalid rank {rank} for family {family.value}")

    chain = [(i, i + 1, 3) for i in range(1, rank)]
    if family in (Family.B, Family.C):
        chain[-1] = (rank - 1, rank, 4)
    elif family is Family.F4:
        chain[1] = (2, 3, 4)
    elif family is Family.H2:
        chain[0] = (1, 2, 5)
    elif family in (Family.H3, Family.H4):
        chain[-1] = (rank - 1, rank, 5)
    elif family is Family.D:
        # fork: replace the last chain edge by two tips on node rank-2
        chain = [(i, i + 1, 3) for i in range(1, rank - 1)]
        chain.append((rank - 2, rank, 3))
    return Diagram(family, rank, tuple(sorted(chain)))


_NAME_RE = re.compile(r"([a-hA-H])\s*([0-9]+)")


def parse_name(name: str) -> Diagram:
    """Parse diagram names like ``A4``, ``b7``, ``F4``, ``H3``."""
    m = _NAME_RE.fullmatch(name.strip())
    if m is None:
        raise DiagramError(f"unknown diagram name: {name!r}")
    letter = m.group(1).upper()
    rank = int(m.group(2))
    if letter in ("A", "B", "C", "D"):
        return build(Family(letter), rank)
    if letter == "F":
        if rank != 4:
            raise DiagramError(f"unknown diagram name: {name!r} (only F4 exists)")
        return build(Family.F4, 4)
    if letter == "H":
        try:
            return build(Family(f"H{rank}"), rank)
        except ValueError as exc:
            raise DiagramError(
                f"unknown diagram name: {name!r} (H2, H3, H4 exist)"
            ) from exc
    raise DiagramError(f"unknown diagram name: {name!r}")


# -- root geometry -----------------------------------------------------

def _root_lengths_sq(d: Diagram) -> tuple[Fraction, ...]:
    """Squared lengths of the simple roots (long = 2, short = 1)."""
    n = d.rank
    if d.family is Family.B:
        return tuple(Fraction(2) if i < n else Fraction(1) for i in d.nodes)
    if d.family is Family.C:
        return tuple(Fraction(1) if i < n else Fraction(2) for i in d.nodes)
    if d.family is Family.F4:
        return (Fraction(2), Fraction(2), Fraction(1), Fraction(1))
    return tuple(Fraction(2) for _ in d.nodes)


def _root_inner(d: Diagram, lengths: tuple[Fraction, ...], i: int, j: int) -> QSqrt5:
    """Exact inner product of simple roots i and j (1-based)."""
    if i == j:
        return QSqrt5(lengths[i - 1])
    m = d.label(i, j)
    if m == 2:
        return ZERO
    li, lj = lengths[i - 1], lengths[j - 1]
    if m == 3:
        # equal lengths; -|a|^2 cos(pi/3)
        return QSqrt5(-li * _HALF)
    if m == 4:
        # one long, one short: -sqrt(2)*1*cos(pi/4) = -1
        return QSqrt5(-1)
    if m == 5:
        # equal length 2: -2 cos(pi/5) = -golden
        return -GOLDEN
    raise DiagramError(f"unsupported edge label {m}")


@cache
def cartan_matrix(d: Diagram) -> MatrixQ:
    """Cartan matrix C with C_ij = 2 (a_i|a_j) / (a_j|a_j).

    Rows express the simple roots in the basis of fundamental weights.
    """
    lengths = _root_lengths_sq(d)
    rows = []
    for i in d.nodes:
        row = []
        for j in d.nodes:
            prod = _root_inner(d, lengths, i, j)
            row.append(prod * 2 * QSqrt5(Fraction(1) / lengths[j - 1]))
        rows.append(tuple(row))
    return tuple(rows)


def simple_root_gram(d: Diagram) -> MatrixQ:
    """Gram matrix of the simple roots, (a_i|a_j)."""
    lengths = _root_lengths_sq(d)
    return tuple(
        tuple(_root_inner(d, lengths, i, j) for j in d.nodes) for i in d.nodes
    )


@cache
def gram_matrix_weights(d: Diagram) -> MatrixQ:
    """Gram matrix G of the fundamental weights, G = C^-1 A C^-T."""
    c_inv = matrix_inverse(cartan_matrix(d))
    return matrix_multiply(matrix_multiply(c_inv, simple_root_gram(d)), matrix_transpose(c_inv))


# -- small exact matrix helpers (n <= 8, Gauss-Jordan) -------------------

def matrix_multiply(x: MatrixQ, y: MatrixQ) -> MatrixQ:
    return tuple(
        tuple(sum((xi * yj for xi, yj in zip(row, col)), ZERO) for col in zip(*y))
        for row in x
    )

def matrix_transpose(x: MatrixQ) -> MatrixQ:
    return tuple(zip(*x))


def matrix_inverse(x: MatrixQ) -> MatrixQ:
    n = len(x)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(x)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col].invert()
        aug[col] = [v * scale for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def matrix_determinant(x: MatrixQ) -> QSqrt5:
    n = len(x)
    rows = [list(row) for row in x]
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = rows[col][col].invert()
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    return det


# -- orders and root counts ----------------------------------------------

def _component_order(family: str, rank: int) -> int:
    if family == "A":
        return math.factorial(rank + 1)
    if family == "BC":
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if family == "F4":
        return 1152
    if family == "H":
        return {2: 10, 3: 120, 4: 14400}[rank]
    raise ValueError(f"unknown component family {family!r}")


def group_order(d: Diagram) -> int:
    """Order of the reflection group of the diagram."""
    n = d.rank
    return {
        Family.A: lambda: math.factorial(n + 1),
        Family.B: lambda: 2**n * math.factorial(n),
        Family.C: lambda: 2**n * math.factorial(n),
        Family.D: lambda: 2 ** (n - 1) * math.factorial(n),
        Family.F4: lambda: 1152,
        Family.H2: lambda: 10,
        Family.H3: lambda: 120,
        Family.H4: lambda: 14400,
    }[d.family]()


def root_count(d: Diagram) -> int:
    """Number of nonzero roots of the associated root system."""
    n = d.rank
    return {
        Family.A: lambda: n * (n + 1),
        Family.B: lambda: 2 * n * n,
        Family.C: lambda: 2 * n * n,
        Family.D: lambda: 2 * n * n - 2 * n,
        Family.F4: lambda: 48,
        Family.H2: lambda: 10,
        Family.H3: lambda: 30,
        Family.H4: lambda: 60,
    }[d.family]()


# -- parabolic sub-diagrams ----------------------------------------------

def _components(d: Diagram, nodes: frozenset[int]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            cur = queue.pop()
            for nb in d.neighbors(cur):
                if nb in nodes and nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    queue.append(nb)
        comps.append(sorted(comp))
    return comps


def _classify_path(d: Diagram, comp: list[int]) -> tuple[str, int]:
    """Classify a path-shaped component by its edge labels."""
    k = len(comp)
    if k == 1:
        return ("A", 1)
    in_comp = set(comp)
    degree = {v: sum(1 for nb in d.neighbors(v) if nb in in_comp) for v in comp}
    ends = [v for v in comp if degree[v] == 1]
    if len(ends) != 2:
        raise ValueError(f"nodes {comp} do not induce a path")
    # walk the path from the smaller end
    order = [min(ends)]
    prev = None
    while len(order) < k:
        nxt = [nb for nb in d.neighbors(order[-1]) if nb in in_comp and nb != prev]
        prev = order[-1]
        order.append(nxt[0])
    labels = [d.label(order[i], order[i + 1]) for i in range(k - 1)]
    special = [(pos, m) for pos, m in enumerate(labels) if m != 3]
    if not special:
        return ("A", k)
    if len(special) > 1:
        raise ValueError(f"nodes {comp} induce an unsupported multi-labelled chain")
    pos, m = special[0]
    at_end = pos in (0, k - 2)
    if m == 4:
        if at_end:
            return ("BC", k)
        if k == 4 and pos == 1:
            return ("F4", 4)
        raise ValueError(f"nodes {comp} induce an unsupported interior double bond")
    if m == 5 and at_end and k <= 4:
        return ("H", k)
    raise ValueError(f"nodes {comp} induce an unrecognized diagram")


def _classify_fork(d: Diagram, comp: list[int]) -> tuple[str, int]:
    in_comp = set(comp)
    degree = {v: sum(1 for nb in d.neighbors(v) if nb in in_comp) for v in comp}
    forks = [v for v in comp if degree[v] == 3]
    if len(forks) != 1 or any(deg > 3 for deg in degree.values()):
        raise ValueError(f"nodes {comp} induce an unsupported branched diagram")
    leaves_at_fork = sum(1 for nb in d.neighbors(forks[0]) if nb in in_comp and degree[nb] == 1)
    labels_ok = all(
        d.label(i, j) == 3 for i in comp for j in comp if i < j and d.label(i, j) > 2
    )
    if leaves_at_fork >= 2 and labels_ok and len(comp) >= 4:
        return ("D", len(comp))
    raise ValueError(f"nodes {comp} induce an unsupported branched diagram")


def classify_parabolic(d: Diagram, nodes: frozenset[int] | set[int]) -> list[tuple[str, int]]:
    """Classify the sub-diagram induced by ``nodes``.

    Returns one ``(family, rank)`` pair per connected component, ordered
    by smallest node, with families ``A``, ``BC`` (equal orders), ``D``,
    ``F4`` and ``H``.
    """
    nodes = frozenset(nodes)
    if not nodes <= set(d.nodes):
        raise ValueError(f"nodes {sorted(nodes)} outside 1..{d.rank}")
    out = []
    for comp in _components(d, nodes):
        in_comp = set(comp)
        branched = any(
            sum(1 for nb in d.neighbors(v) if nb in in_comp) > 2 for v in comp
        )
        out.append(_classify_fork(d, comp) if branched else _classify_path(d, comp))
    return out


def parabolic_order(d: Diagram, nodes: frozenset[int] | set[int]) -> int:
    """Order of the subgroup generated by the reflections in ``nodes``."""
    order = 1
    for family, rank in classify_parabolic(d, nodes):
        order *= _component_order(family, rank)
    return order


def is_platonic_chain(d: Diagram) -> bool:
    """True when the diagram is a single branch-free path.

    Only such diagrams, seeded at an extreme node, produce polytopes with
    one symmetry class of face per dimension.
    """
    if d.rank == 1:
        return True
    degrees = {i: len(d.neighbors(i)) for i in d.nodes}
    if any(deg > 2 for deg in degrees.values()):
        return False
    # connected tree with max degree 2 and n-1 edges is a path
    return len(d.edges) == d.rank - 1 and len(_components(d, frozenset(d.nodes))) == 1
