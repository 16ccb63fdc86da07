"""Cycles, the regions they bound, and domination of those regions.

A cycle of a sphere-embedded graph splits the faces in two classes.  Which
class is the *interior* depends on the face the caller declares to be
outer: the class containing ``outer_face`` is the exterior.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Collection, Iterable, Literal, Optional, Sequence

from .plane import PlaneGraph, check_graph

Side = Literal["interior", "exterior"]

MIN_CYCLE_LENGTH = 3
MAX_CYCLE_LENGTH = 8


class LengthOutOfRange(ValueError):
    pass


class NotACycle(ValueError):
    pass


class NotDominated(ValueError):
    pass


class StructureViolation(ValueError):
    pass


class NotPentagulation(ValueError):
    pass


def find_cycles(g: PlaneGraph, length: int) -> list[tuple[int, ...]]:
    """All simple cycles with ``length`` vertices.

    Each cycle is reported once, starting at its smallest vertex and oriented
    so that the second vertex is smaller than the last.
    """
    if not MIN_CYCLE_LENGTH <= length <= MAX_CYCLE_LENGTH:
        raise LengthOutOfRange(
            f"cycle length must lie in {MIN_CYCLE_LENGTH}..{MAX_CYCLE_LENGTH}, got {length}"
        )
    adj = g.adjacency
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(x: int) -> None:
            if len(path) == length:
                if s in adj[x] and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for y in g.rotations[x]:
                if y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    extend(y)
                    path.pop()
                    on_path.discard(y)

        extend(s)
    out.sort()
    return out


def cycle_edges(cycle: Sequence[int]) -> frozenset[tuple[int, int]]:
    m = len(cycle)
    return frozenset(
        (min(cycle[i], cycle[(i + 1) % m]), max(cycle[i], cycle[(i + 1) % m]))
        for i in range(m)
    )


@dataclass(frozen=True)
class RegionPartition:
    cycle: tuple[int, ...]
    interior_vertices: frozenset[int]
    exterior_vertices: frozenset[int]
    interior_faces: frozenset[int]
    exterior_faces: frozenset[int]
    outer_face: int

    def vertices(self, side: Side) -> frozenset[int]:
        return self.interior_vertices if side == "interior" else self.exterior_vertices

    def faces(self, side: Side) -> frozenset[int]:
        return self.interior_faces if side == "interior" else self.exterior_faces

    def flipped(self) -> "RegionPartition":
        """The same cycle with an interior face declared outer instead."""
        return RegionPartition(
            cycle=self.cycle,
            interior_vertices=self.exterior_vertices,
            exterior_vertices=self.interior_vertices,
            interior_faces=self.exterior_faces,
            exterior_faces=self.interior_faces,
            outer_face=min(self.interior_faces),
        )


def _check_cycle(g: PlaneGraph, cycle: Sequence[int]) -> None:
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        raise NotACycle(f"{list(cycle)} is not a simple vertex cycle")
    for i in range(m):
        a, b = cycle[i], cycle[(i + 1) % m]
        if not 0 <= a < g.n or not g.has_edge(a, b):
            raise NotACycle(f"{a}-{b} is not an edge of the graph")


def partition_by_cycle(
    g: PlaneGraph, cycle: Sequence[int], outer_face: int
) -> RegionPartition:
    """Split faces and vertices by ``cycle``.

    Faces are flood-filled through the dual graph starting at ``outer_face``,
    never crossing an edge of the cycle.  Chords of the cycle are crossed
    freely, so they end up on whichever side contains them.
    """
    _check_cycle(g, cycle)
    faces = g.faces
    if not 0 <= outer_face < len(faces):
        raise IndexError(f"face {outer_face} out of range")
    blocked = cycle_edges(cycle)
    fod = g.face_of_dart
    ext = {outer_face}
    stack = [outer_face]
    while stack:
        f = stack.pop()
        for u, v in faces[f].darts:
            if (min(u, v), max(u, v)) in blocked:
                continue
            h = fod[(v, u)]
            if h not in ext:
                ext.add(h)
                stack.append(h)
    on_cycle = set(cycle)
    int_v, ext_v = set(), set()
    for v in range(g.n):
        if v in on_cycle:
            continue
        (ext_v if fod[(v, g.rotations[v][0])] in ext else int_v).add(v)
    all_faces = frozenset(range(len(faces)))
    return RegionPartition(
        cycle=tuple(cycle),
        interior_vertices=frozenset(int_v),
        exterior_vertices=frozenset(ext_v),
        interior_faces=all_faces - ext,
        exterior_faces=frozenset(ext),
        outer_face=outer_face,
    )


def is_jordan_separating(p: RegionPartition) -> bool:
    return bool(p.interior_vertices) and bool(p.exterior_vertices)


def dominates(g: PlaneGraph, dominators: Iterable[int], region: Iterable[int]) -> bool:
    """Every vertex of ``region`` has a neighbour in ``dominators``."""
    dom = frozenset(dominators)
    adj = g.adjacency
    return all(adj[w] & dom for w in region)


def edges_in_region(g: PlaneGraph, p: RegionPartition, side: Side) -> set[tuple[int, int]]:
    """Edges whose two incident faces both lie on ``side``."""
    fs = p.faces(side)
    fod = g.face_of_dart
    return {
        (u, v) for u, v in g.edges if fod[(u, v)] in fs and fod[(v, u)] in fs
    }


# ---------------------------------------------------------------------------
# 4-cycles dominating a side
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FourCycleDecomposition:
    """Pole-to-pole bundle filling the dominated side of a 4-cycle.

    ``cyclic_order`` lists every path in rotation order around ``pole_u``;
    paths run from ``pole_u`` to ``pole_v``.
    """

    cycle: tuple[int, ...]
    pole_u: int
    pole_v: int
    k: int
    paths3: tuple[tuple[int, ...], ...]
    paths2: tuple[tuple[int, ...], ...]
    cyclic_order: tuple[tuple[int, ...], ...]

    def edges(self) -> set[tuple[int, int]]:
        """Edges of the cycle plus every bundle path."""
        out = set(cycle_edges(self.cycle))
        for path in self.cyclic_order:
            out |= {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
        return out

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "pole_u": self.pole_u,
            "pole_v": self.pole_v,
            "k": self.k,
            "paths3": [list(p) for p in self.paths3],
            "paths2": [list(p) for p in self.paths2],
        }


def four_cycle_structure(
    g: PlaneGraph, p: RegionPartition, *, require_pentagulation: bool = True
) -> FourCycleDecomposition:
    """Decompose the interior of a dominating 4-cycle into alternating paths.

    Raises :class:`NotDominated` when the cycle does not dominate its
    interior and :class:`StructureViolation` when the interior is not an
    alternating bundle of length-3 and length-2 paths between two opposite
    cycle vertices.
    """
    cycle = p.cycle
    if len(cycle) != 4:
        raise ValueError("four_cycle_structure needs a 4-cycle")
    if require_pentagulation and not check_graph(g).is_pentagulation:
        raise NotPentagulation("graph is not a pentagulation")
    inner = p.interior_vertices
    if not dominates(g, cycle, inner):
        raise NotDominated(f"{list(cycle)} does not dominate its interior")
    if not inner:
        raise StructureViolation(f"interior of {list(cycle)} has no vertices")
    adj = g.adjacency
    touching = [i for i, c in enumerate(cycle) if adj[c] & inner]
    if len(touching) != 2 or touching[1] - touching[0] != 2:
        raise StructureViolation(
            f"interior neighbours attach to cycle positions {touching}, "
            "expected one opposite pair"
        )
    u, v = cycle[touching[0]], cycle[touching[1]]

    # rotation order around u, restricted to the interior arc
    rot = g.rotations[u]
    c_a, c_b = cycle[(touching[0] - 1) % 4], cycle[(touching[0] + 1) % 4]
    i_a = g.position[u][c_a]
    d = len(rot)
    arcs: list[list[int]] = [[], []]
    which = 0
    for j in range(1, d):
        x = rot[(i_a + j) % d]
        if x == c_b:
            which = 1
            continue
        if x in inner:
            arcs[which].append(x)
    if arcs[0] and arcs[1]:
        raise StructureViolation(f"interior neighbours of {u} lie on both sides of the cycle")
    starts = arcs[0] or arcs[1]

    order: list[tuple[int, ...]] = []
    used: set[int] = set()
    for x in starts:
        if x in adj[v]:
            path: tuple[int, ...] = (u, x, v)
        else:
            nxt = [y for y in adj[x] if y != u]
            if len(nxt) != 1 or nxt[0] not in inner or v not in adj[nxt[0]]:
                raise StructureViolation(f"interior vertex {x} is not on a pole path")
            path = (u, x, nxt[0], v)
        if any(len(adj[w]) != 2 for w in path[1:-1]):
            raise StructureViolation(f"path {list(path)} has an interior vertex of degree != 2")
        used.update(path[1:-1])
        order.append(path)
    if used != inner or sum(len(q) - 2 for q in order) != len(inner):
        raise StructureViolation("pole paths do not cover the interior exactly")

    lengths = [len(q) - 1 for q in order]
    k = lengths.count(3)
    expected = [3 if i % 2 == 0 else 2 for i in range(2 * k - 1)]
    if lengths != expected:
        raise StructureViolation(f"path lengths around the pole are {lengths}")

    dec = FourCycleDecomposition(
        cycle=tuple(cycle),
        pole_u=u,
        pole_v=v,
        k=k,
        paths3=tuple(q for q in order if len(q) == 4),
        paths2=tuple(q for q in order if len(q) == 3),
        cyclic_order=tuple(order),
    )
    # edges drawn in the closed interior; chords running through the
    # exterior are not part of it
    inside = edges_in_region(g, p, "interior") | cycle_edges(cycle)
    if inside != dec.edges():
        raise StructureViolation("the closed interior has edges outside the bundle")
    return dec


# ---------------------------------------------------------------------------
# dislocated 4-cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DislocatedPair:
    cycle1: tuple[int, ...]
    region1: Side
    dom1: tuple[int, int]
    cycle2: tuple[int, ...]
    region2: Side
    dom2: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "cycle1": list(self.cycle1),
            "region1": self.region1,
            "dom1": list(self.dom1),
            "cycle2": list(self.cycle2),
            "region2": self.region2,
            "dom2": list(self.dom2),
        }


def _dominated_sides(
    g: PlaneGraph, cycle: tuple[int, ...], outer_face: int
) -> list[tuple[Side, frozenset[int], frozenset[int], tuple[int, int]]]:
    p = partition_by_cycle(g, cycle, outer_face)
    out = []
    for side in ("interior", "exterior"):
        verts = p.vertices(side)
        for pair in combinations(sorted(cycle), 2):
            if dominates(g, pair, verts):
                out.append((side, p.faces(side), verts, pair))
    return out


def dislocated_pairs(g: PlaneGraph, outer_face: int) -> list[DislocatedPair]:
    """One witness for every unordered pair of dislocated 4-cycles.

    Two regions are taken as disjoint when they share neither a face nor an
    interior vertex.
    """
    cycles = find_cycles(g, 4)
    sides = [_dominated_sides(g, c, outer_face) for c in cycles]
    out = []
    for i, j in combinations(range(len(cycles)), 2):
        witness: Optional[DislocatedPair] = None
        for s1, f1, v1, d1 in sides[i]:
            for s2, f2, v2, d2 in sides[j]:
                if d1 != d2 and not (f1 & f2) and not (v1 & v2):
                    witness = DislocatedPair(cycles[i], s1, d1, cycles[j], s2, d2)
                    break
            if witness:
                break
        if witness:
            out.append(witness)
    return out


def vertex_cut_separates(g: PlaneGraph, cut: Collection[int]) -> bool:
    """True when deleting ``cut`` leaves at least two components."""
    removed = set(cut)
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) < 2:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        x = stack.pop()
        for y in g.rotations[x]:
            if y not in removed and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) < len(rest)
