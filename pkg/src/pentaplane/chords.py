"""Chords across the second neighbourhood shell of a vertex.

For a vertex ``v`` the face star collects every vertex and edge on the
boundary of a face at ``v``.  A k-chord is a path of length k joining two
vertices at distance 2 from ``v`` that avoids the face star's edges and
meets the distance-2 shell only at its ends.
"""

from __future__ import annotations

from dataclasses import dataclass

from .metrics import bfs
from .plane import PlaneGraph, VertexOutOfRange
from .regions import dominates, partition_by_cycle

MAX_CHORD_LENGTH = 4


class UnsupportedChordLength(ValueError):
    pass


class NonUniqueShellNeighbor(ValueError):
    pass


class DegenerateCycle(ValueError):
    """The chord and the two shell-1 neighbours do not close a simple cycle."""


@dataclass(frozen=True)
class FaceStar:
    center: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]


def face_star(g: PlaneGraph, v: int) -> FaceStar:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for f in g.faces_at(v):
        walk = g.faces[f]
        verts.update(walk.vertices)
        edges |= walk.edges()
    return FaceStar(v, frozenset(verts), frozenset(edges))


@dataclass(frozen=True)
class Chord:
    """A chord with respect to ``center``; ``path`` starts at its smaller end."""

    center: int
    path: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.path) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]


def k_chords(g: PlaneGraph, v: int, k: int) -> list[Chord]:
    """Every k-chord with respect to ``v``, once up to reversal."""
    if not 1 <= k <= MAX_CHORD_LENGTH:
        raise UnsupportedChordLength(f"chord length must lie in 1..{MAX_CHORD_LENGTH}")
    shell2 = bfs(g, v).shell(2)
    star = face_star(g, v).edges
    out: list[Chord] = []
    path: list[int] = []

    def extend(x: int) -> None:
        if len(path) == k + 1:
            return
        last = len(path) == k
        for y in g.rotations[x]:
            if (min(x, y), max(x, y)) in star or y in path:
                continue
            if last:
                if y in shell2 and y > path[0]:
                    out.append(Chord(v, (*path, y)))
            elif y not in shell2:
                path.append(y)
                extend(y)
                path.pop()

    for x in sorted(shell2):
        path.append(x)
        extend(x)
        path.pop()
    out.sort(key=lambda c: c.path)
    return out


@dataclass(frozen=True)
class CycleUnder:
    chord: Chord
    u_x: int
    u_y: int
    cycle: tuple[int, ...]


def _shell_neighbor(g: PlaneGraph, v: int, x: int) -> int:
    common = g.adjacency[v] & g.adjacency[x]
    if len(common) != 1:
        raise NonUniqueShellNeighbor(
            f"{x} has {len(common)} neighbours adjacent to {v}, expected exactly one"
        )
    return next(iter(common))


def cycle_under(g: PlaneGraph, chord: Chord) -> CycleUnder:
    """Close ``chord`` through ``v`` via the unique shell-1 neighbours of its ends."""
    if chord.k not in (1, 2):
        raise UnsupportedChordLength(f"cycles under chords need k in (1, 2), got {chord.k}")
    v = chord.center
    x, y = chord.ends
    u_x = _shell_neighbor(g, v, x)
    u_y = _shell_neighbor(g, v, y)
    cycle = (*chord.path, u_y, v, u_x)
    if len(set(cycle)) != len(cycle):
        raise DegenerateCycle(f"{list(cycle)} repeats a vertex")
    return CycleUnder(chord, u_x, u_y, cycle)


def is_minimal_chord(g: PlaneGraph, c: CycleUnder, outer_face: int) -> bool:
    """``C_Q`` dominates its interior and no equal-length chord nests strictly inside.

    Nesting compares interiors as face sets.  Chords whose cycle under is
    undefined are ignored.
    """
    p = partition_by_cycle(g, c.cycle, outer_face)
    if not dominates(g, c.cycle, p.interior_vertices):
        return False
    for other in k_chords(g, c.chord.center, c.chord.k):
        if other == c.chord:
            continue
        try:
            cu = cycle_under(g, other)
        except (NonUniqueShellNeighbor, DegenerateCycle):
            continue
        q = partition_by_cycle(g, cu.cycle, outer_face)
        if q.interior_faces < p.interior_faces:
            return False
    return True


@dataclass(frozen=True)
class ChordCensus:
    center: int
    count_1chords: int
    count_2chords: int

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "count_1chords": self.count_1chords,
            "count_2chords": self.count_2chords,
        }


def short_chord_census(g: PlaneGraph, v: int) -> ChordCensus:
    return ChordCensus(v, len(k_chords(g, v, 1)), len(k_chords(g, v, 2)))
