"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` is a simple connected graph together with a cyclic,
counterclockwise ordering of the neighbours of every vertex.  The ordering
fixes an embedding on the sphere; there is no intrinsic outer face, callers
that need one pass a face id explicitly.

Faces are traced with the rule ``(u, v) -> (v, w)`` where ``w`` precedes
``u`` in the rotation of ``v``.  With counterclockwise rotations this keeps
the traced face on the left of every dart, so bounded faces of a drawing are
traced counterclockwise and the unbounded face clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Dart = tuple[int, int]


class PlaneGraphError(ValueError):
    """Base class for malformed rotation systems."""


class AsymmetricRotation(PlaneGraphError):
    pass


class DuplicateNeighbor(PlaneGraphError):
    pass


class SelfLoop(PlaneGraphError):
    pass


class Disconnected(PlaneGraphError):
    pass


class NotSpherical(PlaneGraphError):
    """The rotation system embeds the graph on a surface of positive genus."""


class VertexOutOfRange(PlaneGraphError, IndexError):
    pass


@dataclass(frozen=True)
class FaceWalk:
    """One facial walk, as the cyclic sequence of darts bounding the face."""

    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    @property
    def is_simple(self) -> bool:
        """True when the walk is a cycle (no repeated vertex, length >= 3)."""
        vs = self.vertices
        return len(vs) >= 3 and len(set(vs)) == len(vs)

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.darts)


@dataclass(frozen=True)
class PlaneGraph:
    """Simple connected plane graph given by counterclockwise rotations.

    Construct through :func:`build_graph`, which validates the invariants;
    the bare constructor trusts its input (the enumerator relies on that).
    """

    n: int
    rotations: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return self.n

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotations)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.rotations[u]) if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @cached_property
    def position(self) -> tuple[dict[int, int], ...]:
        """``position[v][u]`` is the index of ``u`` in ``rotations[v]``."""
        return tuple({u: i for i, u in enumerate(r)} for r in self.rotations)

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        r = self.rotations[v]
        return v, r[(self.position[v][u] - 1) % len(r)]

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(_trace(self))

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def faces_at(self, v: int) -> frozenset[int]:
        """Ids of the faces incident with ``v``."""
        fod = self.face_of_dart
        return frozenset(fod[(v, u)] for u in self.rotations[v])

    def mirror(self) -> "PlaneGraph":
        """The same graph with every rotation reversed (orientation flip)."""
        return PlaneGraph(self.n, tuple(tuple(reversed(r)) for r in self.rotations))

    def relabel(self, perm: Sequence[int]) -> "PlaneGraph":
        """Rename vertex ``v`` to ``perm[v]``."""
        rot: list[tuple[int, ...]] = [()] * self.n
        for v, r in enumerate(self.rotations):
            rot[perm[v]] = tuple(perm[u] for u in r)
        return PlaneGraph(self.n, tuple(rot))

    def face_with_boundary(self, cycle: Sequence[int]) -> int:
        """Id of the face whose boundary visits exactly ``cycle`` (either direction)."""
        target = _cyclic_key(cycle)
        for i, f in enumerate(self.faces):
            if f.length == len(cycle) and _cyclic_key(f.vertices) == target:
                return i
        raise KeyError(f"no face bounded by {list(cycle)}")

    @cached_property
    def _code_context(self) -> "_CodeContext":
        return _CodeContext(self)


def _cyclic_key(seq: Sequence[int]) -> tuple[int, ...]:
    s = list(seq)
    best = None
    for cand in (s, s[::-1]):
        for i in range(len(cand)):
            rot = tuple(cand[i:] + cand[:i])
            if best is None or rot < best:
                best = rot
    return best or ()


def _trace(g: PlaneGraph) -> list[FaceWalk]:
    if g.n == 1:
        return [FaceWalk(())]
    seen: set[Dart] = set()
    faces = []
    for u in range(g.n):
        for v in g.rotations[u]:
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = g.next_dart(d)
            faces.append(FaceWalk(tuple(walk)))
    return faces


def build_graph(vertex_count: int, rotations: Iterable[Iterable[int]]) -> PlaneGraph:
    """Validate a rotation system and return it as a :class:`PlaneGraph`.

    Raises one of the :class:`PlaneGraphError` subclasses when the rotations
    are asymmetric, repeat a neighbour, contain a loop, leave the graph
    disconnected, or describe an embedding that is not spherical.
    """
    if vertex_count < 1:
        raise PlaneGraphError("vertex_count must be at least 1")
    rot = tuple(tuple(int(u) for u in r) for r in rotations)
    if len(rot) != vertex_count:
        raise PlaneGraphError(
            f"expected {vertex_count} rotation lists, got {len(rot)}"
        )
    for v, r in enumerate(rot):
        for u in r:
            if not 0 <= u < vertex_count:
                raise VertexOutOfRange(f"vertex {v} lists neighbour {u}")
            if u == v:
                raise SelfLoop(f"vertex {v} lists itself")
        if len(set(r)) != len(r):
            raise DuplicateNeighbor(f"vertex {v} repeats a neighbour: {list(r)}")
    adj = [set(r) for r in rot]
    for v, r in enumerate(rot):
        for u in r:
            if v not in adj[u]:
                raise AsymmetricRotation(f"{v} lists {u} but {u} does not list {v}")
    if not _connected(adj):
        raise Disconnected("the underlying graph is not connected")
    g = PlaneGraph(vertex_count, rot)
    f = len(g.faces)
    if g.n - g.edge_count + f != 2:
        raise NotSpherical(
            f"n - e + f = {g.n} - {g.edge_count} + {f} != 2; rotations are not planar"
        )
    return g


def _connected(adj: Sequence[Iterable[int]]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(adj)


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    """All facial walks of ``g``; every dart lies on exactly one of them."""
    return list(g.faces)


@dataclass(frozen=True)
class GraphCheckReport:
    is_simple_embedding: bool
    is_two_connected: bool
    uniform_face_length: Optional[int]
    is_pentagulation: bool
    euler_ok: bool
    vertex_count: int
    edge_count: int
    face_count: int

    def to_dict(self) -> dict:
        return {
            "is_simple_embedding": self.is_simple_embedding,
            "is_two_connected": self.is_two_connected,
            "uniform_face_length": self.uniform_face_length,
            "is_pentagulation": self.is_pentagulation,
            "euler_ok": self.euler_ok,
            "n": self.vertex_count,
            "e": self.edge_count,
            "f": self.face_count,
        }


def check_graph(g: PlaneGraph) -> GraphCheckReport:
    simple = all(
        v not in r and len(set(r)) == len(r) and all(v in g.adjacency[u] for u in r)
        for v, r in enumerate(g.rotations)
    )
    faces = g.faces
    lengths = {f.length for f in faces}
    uniform = lengths.pop() if len(lengths) == 1 else None
    # a plane graph is 2-connected iff every face is bounded by a cycle
    two_conn = g.n >= 3 and all(f.is_simple for f in faces)
    euler = g.n - g.edge_count + len(faces) == 2
    return GraphCheckReport(
        is_simple_embedding=simple,
        is_two_connected=two_conn,
        uniform_face_length=uniform,
        is_pentagulation=simple and euler and two_conn and uniform == 5,
        euler_ok=euler,
        vertex_count=g.n,
        edge_count=g.edge_count,
        face_count=len(faces),
    )


def is_pentagulation(g: PlaneGraph) -> bool:
    return check_graph(g).is_pentagulation


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------


class _CodeContext:
    """Rotation tables for both orientations, shared by all code computations."""

    __slots__ = ("n", "rot", "pos")

    def __init__(self, g: PlaneGraph):
        self.n = g.n
        mirrored = tuple(tuple(reversed(r)) for r in g.rotations)
        self.rot = (g.rotations, mirrored)
        self.pos = (
            g.position,
            tuple({u: i for i, u in enumerate(r)} for r in mirrored),
        )

    def code(self, u0: int, v0: int, flip: int) -> tuple[list[int], list[int]]:
        """BFS code rooted at dart ``(u0, v0)``; ``flip`` selects the orientation.

        Returns the code and the labelling it induces (labels start at 1).
        """
        rot = self.rot[flip]
        pos = self.pos[flip]
        label = [0] * self.n
        entry = [0] * self.n
        label[u0] = 1
        entry[u0] = v0
        queue = [u0]
        nxt = 2
        code: list[int] = []
        append = code.append
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            r = rot[x]
            d = len(r)
            k = pos[x][entry[x]]
            for j in range(k, k + d):
                y = r[j % d] if j >= d else r[j]
                if not label[y]:
                    label[y] = nxt
                    nxt += 1
                    entry[y] = x
                    queue.append(y)
                append(label[y])
            append(0)
        return code, label


def face_starts(g: PlaneGraph, face: int) -> list[tuple[int, int, int]]:
    """Root darts whose BFS codes single out ``face`` up to isomorphism.

    Orientation-reversing maps send traced darts to reversed traced darts,
    hence the second half of the list.
    """
    darts = g.faces[face].darts
    return [(u, v, 0) for u, v in darts] + [(v, u, 1) for u, v in darts]


def best_code(
    g: PlaneGraph, starts: Iterable[tuple[int, int, int]]
) -> tuple[list[int], list[list[int]]]:
    """Minimum code over ``starts`` and every labelling achieving it."""
    ctx = g._code_context
    best: Optional[list[int]] = None
    labellings: list[list[int]] = []
    for u, v, flip in starts:
        code, label = ctx.code(u, v, flip)
        if best is None or code < best:
            best = code
            labellings = [label]
        elif code == best:
            labellings.append(label)
    assert best is not None
    return best, labellings


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Byte string identifying an embedding up to relabelling and reflection."""

    code: bytes

    def hex(self) -> str:
        return self.code.hex()


def _pack(n: int, e: int, code: Sequence[int]) -> bytes:
    return b"".join(x.to_bytes(2, "big") for x in (n, e, *code))


def canonical_code(g: PlaneGraph) -> CanonicalCode:
    if g.n == 1:
        return CanonicalCode(_pack(1, 0, ()))
    starts = [(u, v, flip) for u in range(g.n) for v in g.rotations[u] for flip in (0, 1)]
    code, _ = best_code(g, starts)
    return CanonicalCode(_pack(g.n, g.edge_count, code))


def marked_face_code(g: PlaneGraph, face: int) -> CanonicalCode:
    """Code of ``g`` with ``face`` distinguished; equal for faces in one orbit."""
    code, _ = best_code(g, face_starts(g, face))
    return CanonicalCode(_pack(g.n, g.edge_count, code))
