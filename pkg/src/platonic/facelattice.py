"""Face classes of Platonic polytopes: counts, realization and incidence.

A face class is one decoration of the chain recursion together with its
derived data: the face dimension, the node sets generating the face's own
symmetry group and its pointwise stabilizer, and the class size

    count = |W| / (|stabilizer parabolic| * |face parabolic|).

Every counting statement here has a geometric counterpart: faces are
realized as exact vertex sets (the orbit of the seed vertex under the
face's generators) and whole classes are enumerated by a breadth-first
closure on vertex sets.  The two routes are kept independent so one can
check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .decoration import Decoration, DecorationError, End, chain, dual_read, validate
from .diagram import Diagram, Family, group_order, is_platonic_chain, parabolic_order
from .orbit import Point, fundamental_weight, orbit, reflect

Face = tuple[Point, ...]


@dataclass(frozen=True)
class FaceClass:
    """One symmetry class of faces, as read from a decoration."""

    decoration: Decoration
    dimension: int
    face_nodes: frozenset[int]
    stab_nodes: frozenset[int]
    count: int
    dual_dimension: int


def _require_chain(d: Diagram) -> None:
    if not is_platonic_chain(d):
        raise DecorationError(
            f"{d.name} is not a branch-free chain; its polytopes have several "
            "orbits of faces and are not handled here"
        )


def face_count(d: Diagram, dec: Decoration) -> int:
    """Number of faces in the class of ``dec``: |W| over both parabolic orders."""
    _require_chain(d)
    if not validate(d, dec):
        raise DecorationError(f"invalid decoration {dec.text} for {d.name}")
    total = group_order(d)
    denom = parabolic_order(d, dec.open_nodes) * parabolic_order(d, dec.filled_nodes)
    assert total % denom == 0, f"non-integral face count {total}/{denom}"
    return total // denom


def face_class(d: Diagram, dec: Decoration) -> FaceClass:
    return FaceClass(
        decoration=dec,
        dimension=dec.dimension,
        face_nodes=dec.filled_nodes,
        stab_nodes=dec.open_nodes,
        count=face_count(d, dec),
        dual_dimension=dec.dual_dimension,
    )


def face_table(d: Diagram) -> tuple[FaceClass, ...]:
    """All 2n face classes, alternating left/right seeds per dimension.

    Row order matches the conventional tables: for each dimension first
    the left-seeded class, then the right-seeded (dual) one.
    """
    _require_chain(d)
    left = chain(d, End.LEFT)
    right = chain(d, End.RIGHT)
    rows = []
    for k in range(d.rank):
        rows.append(face_class(d, left[k]))
        rows.append(face_class(d, right[k]))
    return tuple(rows)


def locate_in_chain(d: Diagram, dec: Decoration) -> tuple[End, int]:
    """Which chain (seed end) and dimension a decoration belongs to."""
    _require_chain(d)
    for end in (End.LEFT, End.RIGHT):
        seq = chain(d, end)
        if dec in seq:
            return end, seq.index(dec)
    raise DecorationError(f"decoration {dec.text} is not in either chain of {d.name}")


def stabilizer_ratio(d: Diagram, dec_c: Decoration, dec_d: Decoration) -> int:
    """Ratio of the two stabilizer-parabolic orders for faces of dimensions c < d.

    For consecutive dimensions this is the number of d-faces meeting in a
    (d-1)-face; for a wider gap it counts flags rather than distinct
    faces (see incidence_count for the geometric number).
    """
    end_c, dim_c = locate_in_chain(d, dec_c)
    end_d, dim_d = locate_in_chain(d, dec_d)
    if end_c is not end_d and d.rank > 1:
        raise DecorationError("decorations come from different seed ends")
    if dim_c >= dim_d:
        raise DecorationError(f"need dimensions c < d, got {dim_c} >= {dim_d}")
    num = parabolic_order(d, dec_c.open_nodes)
    den = parabolic_order(d, dec_d.open_nodes)
    assert num % den == 0, f"non-integral stabilizer ratio {num}/{den}"
    return num // den


def intersection_symmetry_nodes(dec_k: Decoration, dec_j: Decoration) -> frozenset[int]:
    """Generators of the symmetry group of the intersection of two faces.

    The filled node sets of chain decorations are nested, so this is the
    smaller face's filled set.
    """
    return dec_k.filled_nodes & dec_j.filled_nodes


def face_stabilizer_nodes(dec: Decoration) -> frozenset[int]:
    """Generators of the setwise stabilizer of a face: open and filled nodes."""
    return dec.filled_nodes | dec.open_nodes


def seed_point(d: Diagram, end: End) -> Point:
    """The seed vertex: first fundamental weight (left) or last (right)."""
    return fundamental_weight(d, 1 if end is End.LEFT else d.rank)


def canonical_face(points) -> Face:
    """Vertex set in sorted order; face identity is its vertex set."""
    return tuple(sorted(set(points)))


def realize_representative(d: Diagram, dec: Decoration) -> Face:
    """One concrete face of the class: seed-vertex orbit under the face group."""
    end, _ = locate_in_chain(d, dec)
    pts = orbit(d, seed_point(d, end), dec.filled_nodes).points
    return canonical_face(pts)


@cache
def enumerate_faces(d: Diagram, dec: Decoration) -> tuple[Face, ...]:
    """Every face of the class, via breadth-first closure on vertex sets.

    Applies each generating reflection to the whole vertex set of each
    known face and deduplicates canonically.  The result is sorted and
    its size is checked against the counting formula.
    """
    first = realize_representative(d, dec)
    seen = {first}
    frontier = [first]
    while frontier:
        face = frontier.pop()
        for i in d.nodes:
            image = canonical_face(reflect(d, i, p) for p in face)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    expected = face_count(d, dec)
    assert len(seen) == expected, (
        f"geometric enumeration found {len(seen)} faces, counting gives {expected}"
    )
    return tuple(sorted(seen))


def incidence_count(d: Diagram, dec_c: Decoration, dec_d: Decoration) -> int:
    """How many distinct d-faces contain one fixed c-face, geometrically.

    Counts members of the enumerated d-class whose vertex set contains the
    representative c-face.  Agrees with stabilizer_ratio for consecutive
    dimensions; for wider gaps the ratio counts flags and can be larger.
    """
    end_c, dim_c = locate_in_chain(d, dec_c)
    end_d, dim_d = locate_in_chain(d, dec_d)
    if end_c is not end_d and d.rank > 1:
        raise DecorationError("decorations come from different seed ends")
    if dim_c >= dim_d:
        raise DecorationError(f"need dimensions c < d, got {dim_c} >= {dim_d}")
    small = set(realize_representative(d, dec_c))
    return sum(1 for face in enumerate_faces(d, dec_d) if small <= set(face))


def euler_sum(d: Diagram, end: End) -> int:
    """Alternating sum of face counts; 2 in odd rank, 0 in even rank."""
    return sum(
        (-1) ** k * face_count(d, dec) for k, dec in enumerate(chain(d, end))
    )


_NAMES_3D = {4: "tetrahedron", 6: "octahedron", 8: "cube",
             12: "icosahedron", 20: "dodecahedron"}
_NAMES_4D = {5: "pentatope", 8: "16-cell", 16: "tesseract", 24: "24-cell",
             120: "600-cell", 600: "120-cell"}
_NAMES_2D = {3: "triangle", 4: "square", 5: "pentagon"}


def polytope_name(d: Diagram, end: End) -> str:
    """Conventional name, keyed strictly on the vertex count.

    In particular the icosahedron is the 12-vertex pentagonal polytope and
    the dodecahedron the 20-vertex one, whatever the seed was called
    elsewhere.
    """
    vertices = face_count(d, chain(d, end)[0])
    if d.rank == 1:
        return "segment"
    if d.rank == 2:
        return _NAMES_2D.get(vertices, f"{vertices}-gon")
    if d.rank == 3 and vertices in _NAMES_3D:
        return _NAMES_3D[vertices]
    if d.rank == 4 and vertices in _NAMES_4D:
        return _NAMES_4D[vertices]
    if d.family is Family.A:
        return f"{d.rank}-simplex"
    if d.family in (Family.B, Family.C):
        return "cross-polytope" if vertices == 2 * d.rank else "hypercube"
    return f"{d.name} polytope ({end.value} seed)"  # pragma: no cover


EDGE_MEET_NOTE_600CELL = (
    "600-cell: 12 edges meet at every vertex (double counting: 720 edges "
    "with 2 ends over 120 vertices gives 12). The figure 20 sometimes "
    "quoted for this entry is the number of tetrahedral cells around a "
    "vertex, not the number of edges."
)


def meeting_note(d: Diagram, end: End, c: int, dim_d: int) -> str | None:
    """Caveat attached to specific meeting numbers, if any."""
    if d.family is Family.H4 and end is End.LEFT and (c, dim_d) == (0, 1):
        return EDGE_MEET_NOTE_600CELL
    return None


def report(d: Diagram, end: End) -> dict:
    """Structured face report for one polytope (fixed JSON field names)."""
    decs = chain(d, end)
    rows = []
    for dec in decs:
        fc = face_class(d, dec)
        rows.append({
            "decoration": dec.text,
            "d": fc.dimension,
            "v": fc.dual_dimension,
            "face_nodes": sorted(fc.face_nodes),
            "stab_nodes": sorted(fc.stab_nodes),
            "count": fc.count,
        })
    meets = []
    for k in range(1, d.rank):
        meets.append({
            "c": k - 1,
            "d": k,
            "ratio": stabilizer_ratio(d, decs[k - 1], decs[k]),
            "geometric": incidence_count(d, decs[k - 1], decs[k]),
        })
    return {"diagram": d.name, "end": end.value, "rows": rows, "meets": meets}
