"""Self-verification battery.

Each check pits the counting formulas against independent routes: frozen
reference tables, closed-form factorial expressions, geometric set
enumeration, double counting and classical polytope identities.  The one
deliberate divergence from the usual printed table (edges per vertex of
the 600-cell) is asserted at its recomputed value and flagged with a
note instead of being reproduced.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from . import facelattice
from .decoration import End, chain, dual_read
from .diagram import (
    Diagram,
    Family,
    build,
    group_order,
    parabolic_order,
    parse_name,
    root_count,
)
from .orbit import (
    as_point,
    fundamental_weight,
    inner,
    norm_sq,
    orbit,
    point_sub,
    random_point,
    reflect,
)

# reference orders and root counts (ranks 1..8 where admissible)
ORDERS_A = (2, 6, 24, 120, 720, 5040, 40320, 362880)
ROOTS_A = (2, 6, 12, 20, 30, 42, 56, 72)
ORDERS_BC = (8, 48, 384, 3840, 46080, 645120, 10321920)  # n = 2..8
ROOTS_BC = (8, 18, 32, 50, 72, 98, 128)
ORDERS_D = (192, 1920, 23040, 322560, 5160960)  # n = 4..8
ROOTS_D = (24, 40, 60, 84, 112)
ORDERS_EXC = {"F4": 1152, "H2": 10, "H3": 120, "H4": 14400}
ROOTS_EXC = {"F4": 48, "H2": 10, "H3": 30, "H4": 60}

# face counts per class, rows alternating left/right seeds by dimension
FACE_COUNTS_3D = {
    "A3": (4, 4, 6, 6, 4, 4),
    "B3": (6, 8, 12, 12, 8, 6),
    "H3": (12, 20, 30, 30, 20, 12),
}
FACE_COUNTS_4D = {
    "A4": (5, 5, 10, 10, 10, 10, 5, 5),
    "B4": (8, 16, 24, 32, 32, 24, 16, 8),
    "F4": (24, 24, 96, 96, 96, 96, 24, 24),
    "H4": (120, 600, 720, 1200, 1200, 720, 600, 120),
}

# 4-dimensional meeting numbers: vertices, edges per vertex, 2-faces per edge
MEETING_4D = (
    ("pentatope", "A4", End.LEFT, 5, 4, 3),
    ("16-cell", "B4", End.LEFT, 8, 6, 4),
    ("tesseract", "B4", End.RIGHT, 16, 4, 3),
    ("24-cell", "F4", End.LEFT, 24, 8, 3),
    # recomputed: 2*720/120 = 12 edges per vertex (tables often print 20,
    # the number of cells per vertex); asserted at 12 with a note
    ("600-cell", "H4", End.LEFT, 120, 12, 5),
    ("120-cell", "H4", End.RIGHT, 600, 4, 3),
)


@dataclass
class CheckResult:
    number: int
    title: str
    limit_seconds: float
    passed: bool = True
    note: str | None = None
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if not self.passed:
            return "FAIL"
        return "PASS-WITH-NOTE" if self.note else "PASS"


def _expect(result: CheckResult, ok: bool, message: str) -> None:
    if not ok:
        result.passed = False
        result.failures.append(message)


def _chain_diagrams(max_rank: int = 8) -> list[Diagram]:
    out = [build(Family.A, n) for n in range(1, max_rank + 1)]
    out += [build(Family.B, n) for n in range(2, max_rank + 1)]
    out += [build(Family.C, n) for n in range(2, max_rank + 1)]
    out += [build(Family.H2, 2), build(Family.H3, 3), build(Family.H4, 4),
            build(Family.F4, 4)]
    return out


def _all_diagrams(max_rank: int = 8) -> list[Diagram]:
    return _chain_diagrams(max_rank) + [build(Family.D, n) for n in range(4, max_rank + 1)]


# -- criterion 1 ---------------------------------------------------------

def check_orders_and_roots(result: CheckResult) -> None:
    """Group orders and root counts across all families."""
    for n in range(1, 9):
        d = build(Family.A, n)
        _expect(result, group_order(d) == ORDERS_A[n - 1],
                f"|W(A{n})|: expected {ORDERS_A[n - 1]}, got {group_order(d)}")
        _expect(result, root_count(d) == ROOTS_A[n - 1],
                f"roots(A{n}): expected {ROOTS_A[n - 1]}, got {root_count(d)}")
    for fam in (Family.B, Family.C):
        for n in range(2, 9):
            d = build(fam, n)
            _expect(result, group_order(d) == ORDERS_BC[n - 2],
                    f"|W({fam.value}{n})|: expected {ORDERS_BC[n - 2]}, got {group_order(d)}")
            _expect(result, root_count(d) == ROOTS_BC[n - 2],
                    f"roots({fam.value}{n}): expected {ROOTS_BC[n - 2]}, got {root_count(d)}")
    for n in range(4, 9):
        d = build(Family.D, n)
        _expect(result, group_order(d) == ORDERS_D[n - 4],
                f"|W(D{n})|: expected {ORDERS_D[n - 4]}, got {group_order(d)}")
        _expect(result, root_count(d) == ROOTS_D[n - 4],
                f"roots(D{n}): expected {ROOTS_D[n - 4]}, got {root_count(d)}")
    for name, expected in ORDERS_EXC.items():
        d = parse_name(name)
        _expect(result, group_order(d) == expected,
                f"|W({name})|: expected {expected}, got {group_order(d)}")
    for name, expected in ROOTS_EXC.items():
        d = parse_name(name)
        _expect(result, root_count(d) == expected,
                f"roots({name}): expected {expected}, got {root_count(d)}")


# -- criteria 2 and 3 -----------------------------------------------------

def _check_face_table(result: CheckResult, name: str, expected: tuple[int, ...]) -> None:
    d = parse_name(name)
    table = facelattice.face_table(d)
    got = tuple(fc.count for fc in table)
    _expect(result, got == expected,
            f"{name} face counts: expected {expected}, got {got}")
    for fc in table:
        enumerated = len(facelattice.enumerate_faces(d, fc.decoration))
        _expect(result, enumerated == fc.count,
                f"{name} {fc.decoration.text}: enumeration gives {enumerated}, "
                f"count gives {fc.count}")


def check_face_counts_3d(result: CheckResult) -> None:
    for name, expected in FACE_COUNTS_3D.items():
        _check_face_table(result, name, expected)


def check_face_counts_4d(result: CheckResult) -> None:
    for name, expected in FACE_COUNTS_4D.items():
        _check_face_table(result, name, expected)


# -- criterion 4 ----------------------------------------------------------

def check_meeting_numbers_4d(result: CheckResult) -> None:
    for label, name, end, vertices, edges_at_vertex, faces_at_edge in MEETING_4D:
        d = parse_name(name)
        decs = chain(d, end)
        got_v = facelattice.face_count(d, decs[0])
        _expect(result, got_v == vertices,
                f"{label}: expected {vertices} vertices, got {got_v}")
        for (c, k), expected in (((0, 1), edges_at_vertex), ((1, 2), faces_at_edge)):
            ratio = facelattice.stabilizer_ratio(d, decs[c], decs[k])
            geometric = facelattice.incidence_count(d, decs[c], decs[k])
            _expect(result, ratio == expected,
                    f"{label}: ratio f{k}(f{c}) expected {expected}, got {ratio}")
            _expect(result, geometric == expected,
                    f"{label}: geometric f{k}(f{c}) expected {expected}, got {geometric}")
    note = facelattice.meeting_note(parse_name("H4"), End.LEFT, 0, 1)
    _expect(result, note is not None and "12" in note and "20" in note,
            "600-cell edge/vertex note missing")
    result.note = note


# -- criterion 5 ----------------------------------------------------------

def _simplex_count(n: int, k: int) -> int:
    return math.factorial(n + 1) // (math.factorial(k + 1) * math.factorial(n - k))


def _cross_count(n: int, k: int) -> int:
    return (2**n * math.factorial(n)) // (
        math.factorial(k + 1) * 2 ** (n - k - 1) * math.factorial(n - k - 1)
    )


def _cube_count(n: int, k: int) -> int:
    return (2**n * math.factorial(n)) // (
        2**k * math.factorial(k) * math.factorial(n - k)
    )


def check_symbolic_counts(result: CheckResult) -> None:
    """Closed-form factorial counts against the decoration formula, n = 5..7."""
    for n in (5, 6, 7):
        a = build(Family.A, n)
        for end in (End.LEFT, End.RIGHT):
            for k, dec in enumerate(chain(a, end)):
                expected = _simplex_count(n, k)
                got = facelattice.face_count(a, dec)
                _expect(result, got == expected,
                        f"A{n} {end.value} f{k}: expected {expected}, got {got}")
        for fam in (Family.B, Family.C):
            d = build(fam, n)
            for k, dec in enumerate(chain(d, End.LEFT)):
                expected = _cross_count(n, k)
                got = facelattice.face_count(d, dec)
                _expect(result, got == expected,
                        f"{fam.value}{n} left f{k}: expected {expected}, got {got}")
            for k, dec in enumerate(chain(d, End.RIGHT)):
                expected = _cube_count(n, k)
                got = facelattice.face_count(d, dec)
                _expect(result, got == expected,
                        f"{fam.value}{n} right f{k}: expected {expected}, got {got}")


# -- criterion 6 ----------------------------------------------------------

def check_meeting_rows_general(result: CheckResult) -> None:
    """Simplex / cross-polytope / hypercube meeting numbers, n = 5..8."""
    for n in range(5, 9):
        a = build(Family.A, n)
        b = build(Family.B, n)
        rows = (
            ("simplex", a, End.LEFT, n + 1, [n + 1 - k for k in range(1, n - 1)]),
            ("cross-polytope", b, End.LEFT, 2 * n, [2 * (n - k) for k in range(1, n - 1)]),
            ("hypercube", b, End.RIGHT, 2**n, [n + 1 - k for k in range(1, n - 1)]),
        )
        for label, d, end, vertices, meets in rows:
            decs = chain(d, end)
            got_v = facelattice.face_count(d, decs[0])
            _expect(result, got_v == vertices,
                    f"{label} n={n}: expected {vertices} vertices, got {got_v}")
            for k, expected in zip(range(1, n - 1), meets):
                got = facelattice.stabilizer_ratio(d, decs[k - 1], decs[k])
                _expect(result, got == expected,
                        f"{label} n={n} f{k}(f{k - 1}): expected {expected}, got {got}")


# -- criterion 7 ----------------------------------------------------------

def check_tetrahedron_vertices(result: CheckResult) -> None:
    a3 = build(Family.A, 3)
    expected_left = {
        as_point((1, 0, 0)), as_point((-1, 1, 0)),
        as_point((0, -1, 1)), as_point((0, 0, -1)),
    }
    expected_right = {
        as_point((0, 0, 1)), as_point((0, 1, -1)),
        as_point((1, -1, 0)), as_point((-1, 0, 0)),
    }
    got_left = set(orbit(a3, fundamental_weight(a3, 1), a3.nodes).points)
    got_right = set(orbit(a3, fundamental_weight(a3, 3), a3.nodes).points)
    _expect(result, got_left == expected_left,
            f"tetrahedron orbit of w1: got {sorted(p for p in got_left)}")
    _expect(result, got_right == expected_right,
            f"tetrahedron orbit of w3: got {sorted(p for p in got_right)}")


# -- criterion 8 ----------------------------------------------------------

def check_structural_properties(result: CheckResult) -> None:
    rng = random.Random(20240811)

    # Euler alternating sums for every chain polytope up to rank 8
    for d in _chain_diagrams():
        for end in (End.LEFT, End.RIGHT):
            expected = 1 - (-1) ** d.rank
            got = facelattice.euler_sum(d, end)
            _expect(result, got == expected,
                    f"Euler sum {d.name} {end.value}: expected {expected}, got {got}")

    # counting is symmetric under the dual reading of each decoration
    for d in _chain_diagrams():
        for end in (End.LEFT, End.RIGHT):
            for dec in chain(d, end):
                _dim, face_nodes, stab_nodes = dual_read(dec)
                via_dual = group_order(d) // (
                    parabolic_order(d, face_nodes) * parabolic_order(d, stab_nodes)
                )
                _expect(result, via_dual == facelattice.face_count(d, dec),
                        f"dual count mismatch for {d.name} {dec.text}")

    # simplex tables are mirror images; double-bond chains share one table
    for n in range(1, 9):
        a = build(Family.A, n)
        left, right = chain(a, End.LEFT), chain(a, End.RIGHT)
        for k in range(n):
            _expect(result, left[k] == right[k].reversed(),
                    f"A{n} chain row {k} is not the mirror of its dual row")
            _expect(result,
                    facelattice.face_count(a, left[k])
                    == facelattice.face_count(a, right[k]),
                    f"A{n} mirror counts differ in dimension {k}")
    for n in range(2, 9):
        b, c = build(Family.B, n), build(Family.C, n)
        counts_b = [fc.count for fc in facelattice.face_table(b)]
        counts_c = [fc.count for fc in facelattice.face_table(c)]
        _expect(result, counts_b == counts_c,
                f"B{n}/C{n} face tables differ: {counts_b} vs {counts_c}")
        left_b = [facelattice.face_count(b, dec) for dec in chain(b, End.LEFT)]
        right_c = [facelattice.face_count(c, dec) for dec in chain(c, End.RIGHT)]
        _expect(result, left_b == right_c[::-1],
                f"B{n} left vs reversed C{n} right: {left_b} vs {right_c[::-1]}")

    # reflections: exact involutions preserving the inner product
    for d in _all_diagrams():
        for _ in range(200):
            x = random_point(d, rng)
            for i in d.nodes:
                _expect(result, reflect(d, i, reflect(d, i, x)) == x,
                        f"reflection {i} of {d.name} is not an involution")
        for _ in range(10):
            x, y = random_point(d, rng), random_point(d, rng)
            base = inner(d, x, y)
            for i in d.nodes:
                moved = inner(d, reflect(d, i, x), reflect(d, i, y))
                _expect(result, moved == base,
                        f"reflection {i} of {d.name} is not an isometry")

    # every edge of a polytope has one exact squared length
    for name in ("A3", "B3", "C3", "H3", "A4", "B4", "C4", "F4", "H4"):
        d = parse_name(name)
        for end in (End.LEFT, End.RIGHT):
            edges = facelattice.enumerate_faces(d, chain(d, end)[1])
            lengths = {norm_sq(d, point_sub(e[0], e[1])) for e in edges}
            _expect(result, len(lengths) == 1,
                    f"{name} {end.value}: edge lengths not uniform: {lengths}")

    # each edge has two endpoints: #f0 * edges-per-vertex = 2 * #f1
    for d in _chain_diagrams():
        if d.rank < 2:
            continue
        for end in (End.LEFT, End.RIGHT):
            decs = chain(d, end)
            v = facelattice.face_count(d, decs[0])
            e = facelattice.face_count(d, decs[1])
            per_vertex = facelattice.incidence_count(d, decs[0], decs[1])
            _expect(result, v * per_vertex == 2 * e,
                    f"{d.name} {end.value}: {v} * {per_vertex} != 2 * {e}")


# -- criterion 9 ----------------------------------------------------------

def check_flag_vs_face_divergence(result: CheckResult) -> None:
    """Octahedron, vertex inside triangle: 8 flags but 4 distinct triangles."""
    b3 = build(Family.B, 3)
    decs = chain(b3, End.LEFT)
    ratio = facelattice.stabilizer_ratio(b3, decs[0], decs[2])
    geometric = facelattice.incidence_count(b3, decs[0], decs[2])
    _expect(result, ratio == 8, f"octahedron flag ratio: expected 8, got {ratio}")
    _expect(result, geometric == 4,
            f"octahedron distinct faces per vertex: expected 4, got {geometric}")


_CHECKS = (
    (1, "group orders and root counts", 1.0, check_orders_and_roots),
    (2, "3-dimensional face counts, formula and enumeration", 5.0, check_face_counts_3d),
    (3, "4-dimensional face counts, formula and enumeration", 120.0, check_face_counts_4d),
    (4, "4-dimensional meeting numbers (with 600-cell note)", 120.0, check_meeting_numbers_4d),
    (5, "closed-form face counts at rank 5..7", 10.0, check_symbolic_counts),
    (6, "meeting numbers of simplex, cross-polytope, hypercube at rank 5..8", 5.0,
     check_meeting_rows_general),
    (7, "tetrahedron vertex orbits as exact coordinates", 1.0, check_tetrahedron_vertices),
    (8, "structural properties (Euler, duality, mirrors, isometry, ...)", 120.0,
     check_structural_properties),
    (9, "flag count vs distinct-face count divergence", 5.0, check_flag_vs_face_divergence),
)


def run_check(number: int) -> CheckResult:
    num, title, limit, fn = _CHECKS[number - 1]
    result = CheckResult(number=num, title=title, limit_seconds=limit)
    start = time.perf_counter()
    fn(result)
    result.seconds = time.perf_counter() - start
    if result.seconds > limit:
        result.passed = False
        result.failures.append(
            f"took {result.seconds:.1f}s, budget is {limit:.0f}s"
        )
    return result


def run_all() -> list[CheckResult]:
    return [run_check(num) for num, *_ in _CHECKS]
