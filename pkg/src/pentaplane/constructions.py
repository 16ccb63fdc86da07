"""Named plane graphs and the extremal family G(delta).

Named graphs are described as straight-line drawings (with optional bend
points for curved edges); rotations are read off by sorting the outgoing
directions at each vertex counterclockwise, and the unbounded face of the
drawing is the one traced with negative signed area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .plane import PlaneGraph, build_graph

Point = tuple[float, float]


class UnknownName(KeyError):
    pass


class EvenDelta(ValueError):
    pass


class DeltaTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Fixture:
    """A built graph with the vertex names used in its figure."""

    name: str
    graph: PlaneGraph
    labels: dict[str, int]
    outer_face: int

    def __getitem__(self, label: str) -> int:
        return self.labels[label]

    def ids(self, *labels: str) -> tuple[int, ...]:
        return tuple(self.labels[x] for x in labels)


@dataclass
class Drawing:
    coords: dict[str, Point]
    edges: list[tuple[str, str]]
    bends: dict[tuple[str, str], list[Point]] = field(default_factory=dict)

    def _route(self, a: str, b: str) -> list[Point]:
        if (a, b) in self.bends:
            return self.bends[(a, b)]
        if (b, a) in self.bends:
            return self.bends[(b, a)][::-1]
        return []

    def embed(self, name: str) -> Fixture:
        labels = {lab: i for i, lab in enumerate(self.coords)}
        names = list(self.coords)
        out: dict[str, list[tuple[float, str]]] = {lab: [] for lab in names}
        for a, b in self.edges:
            for s, t in ((a, b), (b, a)):
                route = self._route(s, t)
                tx, ty = route[0] if route else self.coords[t]
                sx, sy = self.coords[s]
                out[s].append((math.atan2(ty - sy, tx - sx), t))
        rotations = [
            [labels[t] for _, t in sorted(out[lab])] for lab in names
        ]
        g = build_graph(len(names), rotations)
        return Fixture(name, g, labels, self._outer_face(g, names))

    def _outer_face(self, g: PlaneGraph, names: list[str]) -> int:
        negative = []
        for i, f in enumerate(g.faces):
            pts: list[Point] = []
            for u, v in f.darts:
                pts.append(self.coords[names[u]])
                pts.extend(self._route(names[u], names[v]))
            area = sum(
                x0 * y1 - x1 * y0
                for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1])
            )
            if area < 0:
                negative.append(i)
        if len(negative) != 1:
            raise AssertionError(f"drawing {names} has {len(negative)} clockwise faces")
        return negative[0]


def _polar(deg: float, r: float) -> Point:
    a = math.radians(deg)
    return (r * math.cos(a), r * math.sin(a))


def _path_edges(*labels: str) -> list[tuple[str, str]]:
    return list(zip(labels, labels[1:]))


def _cycle_edges(*labels: str) -> list[tuple[str, str]]:
    return _path_edges(*labels, labels[0])


def _c5() -> Drawing:
    coords = {f"v{i + 1}": _polar(90 + 72 * i, 2) for i in range(5)}
    return Drawing(coords, _cycle_edges(*coords))


def _k4() -> Drawing:
    coords = {"a": (0.0, 2.0), "b": (-2.0, -1.0), "c": (2.0, -1.0), "d": (0.0, 0.0)}
    return Drawing(coords, _cycle_edges("a", "b", "c") + [("d", "a"), ("d", "b"), ("d", "c")])


def _script_h() -> Drawing:
    coords = {
        "v1": _polar(90, 3),
        "v2": _polar(162, 3),
        "z1": _polar(234, 3),
        "z2": _polar(306, 3),
        "v4": _polar(18, 3),
        "v3": (0.0, 0.0),
        "w1": (0.0, 1.95),
        "w2": (0.0, 0.99),
    }
    edges = (
        _path_edges("v1", "w1", "w2", "v3")
        + _path_edges("v2", "z1", "z2", "v4")
        + _cycle_edges("v1", "v2", "v3", "v4")
    )
    return Drawing(coords, edges)


def _script_i() -> Drawing:
    coords = {
        "v1": (0.0, 2.0),
        "v2": (1.0, 1.0),
        "v3": (0.0, 0.0),
        "v7": (-1.0, 1.0),
        "v4": (1.0, -1.0),
        "v5": (0.0, -2.0),
        "v6": (-1.0, -1.0),
        "w1": (0.0, 1.33),
        "w2": (0.0, 0.66),
        "z1": (0.0, -0.66),
        "z2": (0.0, -1.33),
    }
    edges = (
        _cycle_edges("v1", "v2", "v3", "v7")
        + _cycle_edges("v3", "v4", "v5", "v6")
        + _path_edges("v1", "w1", "w2", "v3", "z1", "z2", "v5")
        + [("v1", "v5")]
    )
    return Drawing(coords, edges, {("v1", "v5"): [(2.0, 2.0), (2.0, -2.0)]})


def _girth5_counterexample() -> Drawing:
    pos = {
        1: (0, 0), 2: (2, 0), 3: (4, 0), 4: (6, 0), 5: (1, 1), 6: (2, 2),
        7: (3, 3), 8: (4, 2), 9: (5, 1), 10: (3, 1.5), 11: (3, 4.5),
    }
    coords = {str(k): (float(x), float(y)) for k, (x, y) in pos.items()}
    edges = _cycle_edges("1", "5", "6", "7", "8", "9", "4", "3", "2") + [
        ("10", "5"), ("10", "3"), ("10", "8"), ("11", "1"), ("11", "7"), ("11", "4"),
    ]
    return Drawing(coords, edges)


def _dodecahedron() -> Drawing:
    coords: dict[str, Point] = {}
    for i in range(5):
        coords[f"a{i}"] = _polar(90 + 72 * i, 3)
    for j in range(10):
        coords[f"b{j}"] = _polar(90 + 36 * j, 2)
    for i in range(5):
        coords[f"c{i}"] = _polar(90 + 36 * (2 * i + 1), 1)
    edges = (
        _cycle_edges(*(f"a{i}" for i in range(5)))
        + _cycle_edges(*(f"b{j}" for j in range(10)))
        + _cycle_edges(*(f"c{i}" for i in range(5)))
        + [(f"a{i}", f"b{2 * i}") for i in range(5)]
        + [(f"c{i}", f"b{2 * i + 1}") for i in range(5)]
    )
    return Drawing(coords, edges)


def _theorem4_example() -> Drawing:
    # the drawn 4-cycle and its interior bundle; the exterior is closed by a
    # single length-3 path so that every face is a pentagon
    coords = {
        "v1": (0.0, 4.0),
        "v2": (2.0, 2.0),
        "v3": (0.0, 0.0),
        "v4": (-2.0, 2.0),
        "p1": (-0.8, 2.6),
        "q1": (-0.8, 1.4),
        "w": (0.0, 2.0),
        "p2": (0.8, 2.6),
        "q2": (0.8, 1.4),
        "z1": (3.0, -1.0),
        "z2": (-3.0, -1.0),
    }
    edges = (
        _cycle_edges("v1", "v2", "v3", "v4")
        + _path_edges("v1", "p1", "q1", "v3")
        + _path_edges("v1", "w", "v3")
        + _path_edges("v1", "p2", "q2", "v3")
        + _path_edges("v2", "z1", "z2", "v4")
    )
    return Drawing(coords, edges)


def _disloc_g() -> Drawing:
    coords = {
        "u1": (0.0, 4.0),
        "u2": (2.0, 2.0),
        "u3": (0.0, 0.0),
        "u4": (-2.0, 2.0),
        "p1": (-0.8, 2.6),
        "q1": (-0.8, 1.4),
        "u5": (0.0, 2.0),
        "p2": (0.8, 2.6),
        "q2": (0.8, 1.4),
        "s": (-2.0, 4.7),
        "t": (2.0, 4.7),
        "l": (-3.0, 2.0),
        "r": (3.0, 2.0),
        "b": (0.0, -1.0),
    }
    edges = (
        _cycle_edges("u1", "u2", "u3", "u4")
        + _path_edges("u1", "p1", "q1", "u3")
        + _path_edges("u1", "u5", "u3")
        + _path_edges("u1", "p2", "q2", "u3")
        + _path_edges("u4", "s", "t", "u2")
        + _path_edges("s", "l", "b")
        + _path_edges("t", "r", "b")
        + [("u3", "b")]
    )
    return Drawing(coords, edges)


def _disloc_h() -> Drawing:
    coords = {
        "v1": (-2.5, 0.0),
        "v2": (0.0, 2.0),
        "v3": (-0.8, 0.0),
        "v4": (0.0, -2.0),
        "v5": (0.8, 0.0),
        "v6": (2.5, 0.0),
        "w1": (-1.8, 0.0),
        "w2": (-1.3, 0.0),
        "z1": (1.8, 0.0),
        "z2": (1.3, 0.0),
        "s": (-2.0, 2.7),
        "t": (2.0, 2.7),
        "u": (0.0, 0.7),
        "v": (0.0, -0.7),
    }
    edges = (
        _cycle_edges("v1", "v2", "v3", "v4")
        + _cycle_edges("v4", "v6", "v2", "v5")
        + _path_edges("v1", "w1", "w2", "v3")
        + _path_edges("v5", "z2", "z1", "v6")
        + _path_edges("v1", "s", "t", "v6")
        + _path_edges("v2", "u", "v", "v4")
    )
    return Drawing(coords, edges)


def _chord_fixture() -> Drawing:
    # upper neighbourhood of a vertex in a girth-5 pentagulation.  The two
    # edges of v into the lower half end at stubs d1, d2, and three stub
    # pentagons close v off from the unbounded face; otherwise that face
    # would run along the chords and put them in the face star.
    coords: dict[str, Point] = {"v": (0.0, 0.0)}
    coords["d1"] = _polar(210, 2)
    coords["d2"] = _polar(330, 2)
    for name, ang in (("s1", 195), ("s2", 225), ("s3", 250), ("s4", 290), ("s5", 315), ("s6", 345)):
        coords[name] = _polar(ang, 4)
    for i, ang in enumerate((180, 135, 90, 45, 0), start=1):
        coords[f"u{i}"] = _polar(ang, 2)
    for i, ang in enumerate((180, 160, 140, 120, 100, 80, 45, 0), start=1):
        coords[f"w{i}"] = _polar(ang, 4)
    coords["z"] = _polar(50, 5.3)
    edges = [("v", f"u{i}") for i in range(1, 6)] + [
        ("u1", "w1"), ("u2", "w2"), ("u2", "w3"), ("u2", "w4"), ("u3", "w5"),
        ("u3", "w6"), ("u4", "w7"), ("u5", "w8"),
        ("w1", "w2"), ("w4", "w5"), ("w6", "w7"), ("w7", "w8"),
        ("w1", "w5"), ("w5", "z"), ("z", "w8"),
        ("v", "d1"), ("v", "d2"),
        *_path_edges("u1", "s1", "s2", "d1"),
        *_path_edges("d1", "s3", "s4", "d2"),
        *_path_edges("d2", "s5", "s6", "u5"),
    ]
    bends = {
        ("w1", "w5"): [_polar(150, 6), _polar(130, 6)],
        ("w5", "z"): [_polar(75, 5)],
        ("z", "w8"): [_polar(25, 5)],
    }
    return Drawing(coords, edges, bends)


_DRAWINGS = {
    "c5": _c5,
    "k4": _k4,
    "script_h": _script_h,
    "script_i": _script_i,
    "girth5_counterexample": _girth5_counterexample,
    "dodecahedron": _dodecahedron,
    "theorem4_example": _theorem4_example,
    "disloc_g": _disloc_g,
    "disloc_h": _disloc_h,
    "chord_fixture": _chord_fixture,
}

NAMES = tuple(_DRAWINGS)


def fixture(name: str) -> Fixture:
    try:
        drawing = _DRAWINGS[name]
    except KeyError:
        raise UnknownName(f"unknown graph {name!r}; choose from {', '.join(NAMES)}") from None
    return drawing().embed(name)


def build_named(name: str) -> PlaneGraph:
    return fixture(name).graph


# ---------------------------------------------------------------------------
# extremal family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    delta: int

    def __post_init__(self) -> None:
        if self.delta < 3:
            raise DeltaTooSmall(f"delta must be at least 3, got {self.delta}")
        if self.delta % 2 == 0:
            raise EvenDelta(f"the family needs odd delta, got {self.delta}")

    @property
    def k(self) -> int:
        return (self.delta - 1) // 2


def extremal_fixture(p: FamilyParams | int) -> Fixture:
    """G(delta) with labels ``v1..v4`` on the pole 4-cycle.

    ``v1``/``v3`` carry the interior bundle and ``v2``/``v4`` the exterior
    one.  Around each pole the paths appear in the strict order
    3, 2, 3, ..., 2, 3, which is the only order that closes every face to
    a pentagon.  ``outer_face`` is the face bounded by the outermost
    exterior path and ``v2, v3, v4``.
    """
    if isinstance(p, int):
        p = FamilyParams(p)
    k = p.k
    v1, v2, v3, v4 = 0, 1, 2, 3
    adj: list[list[int]] = [[] for _ in range(4)]
    labels = {"v1": v1, "v2": v2, "v3": v3, "v4": v4}

    def bundle(a: int, b: int, tag: str) -> list[tuple[int, int]]:
        """Add 2k-1 a-b paths; return the (first, last) inner vertex of each."""
        ends = []
        for i in range(2 * k - 1):
            length = 3 if i % 2 == 0 else 2
            inner = []
            for j in range(length - 1):
                inner.append(len(adj))
                labels[f"{tag}{i}_{j}"] = len(adj)
                adj.append([])
            chain = [a, *inner, b]
            for x, y in zip(chain, chain[1:]):
                if x >= 4:
                    adj[x].append(y)
                if y >= 4:
                    adj[y].append(x)
            ends.append((inner[0], inner[-1]))
        return ends

    inside = bundle(v1, v3, "i")
    outside = bundle(v2, v4, "e")
    # counterclockwise rotations for v1 top, v2 right, v3 bottom, v4 left
    adj[v1] = [v4, *(s for s, _ in inside), v2]
    adj[v3] = [v2, *(t for _, t in reversed(inside)), v4]
    adj[v2] = [v3, *(s for s, _ in reversed(outside)), v1]
    adj[v4] = [v1, *(t for _, t in outside), v3]
    g = build_graph(len(adj), adj)
    last = outside[-1]
    boundary = [v2, *range(last[0], last[1] + 1), v4, v3]
    return Fixture(f"G({p.delta})", g, labels, g.face_with_boundary(boundary))


def build_extremal(p: FamilyParams | int) -> PlaneGraph:
    return extremal_fixture(p).graph
