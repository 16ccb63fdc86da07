"""Checkable structural facts about pentagulations, run as one report.

Each check records whether its hypotheses apply to the graph, how many
objects (cycles, vertices, chords) it inspected, and the first object that
broke it.  Facts phrased for the interior of a cycle are checked on both
sides, since on the sphere either side may be called the interior.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Iterator, Optional

from .chords import DegenerateCycle, NonUniqueShellNeighbor, cycle_under, k_chords
from .metrics import Acyclic, bfs, diameter, girth, max_degree
from .plane import PlaneGraph, check_graph
from .regions import (
    NotDominated,
    NotPentagulation,
    RegionPartition,
    StructureViolation,
    dominates,
    edges_in_region,
    find_cycles,
    four_cycle_structure,
    is_jordan_separating,
    partition_by_cycle,
    vertex_cut_separates,
)

REPORT_SCHEMA_VERSION = 1
SIDES = ("interior", "exterior")


@dataclass
class CheckResult:
    name: str
    applicable: bool = True
    passed: bool = True
    checked: int = 0
    witness: Optional[dict] = None

    def fail(self, **witness: Any) -> None:
        if self.passed:
            self.passed = False
            self.witness = witness

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "checked": self.checked,
            "witness": self.witness,
        }


@dataclass
class LemmaReport:
    n: int
    max_degree: int
    diameter: int
    girth: Optional[int]
    checks: dict[str, CheckResult] = field(default_factory=dict)
    separating_face_cycles: list[list[int]] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks.values() if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        return self.checks[name]

    def to_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "n": self.n,
            "max_degree": self.max_degree,
            "diameter": self.diameter,
            "girth": self.girth,
            "order_bound": {
                "bound": 3 * self.max_degree - 1,
                "holds": self.n <= 3 * self.max_degree - 1,
            },
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks.values()],
            "separating_face_cycles": self.separating_face_cycles,
        }

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)


class _Context:
    """Cycles and partitions shared between checks."""

    def __init__(self, g: PlaneGraph, outer_face: int):
        self.g = g
        self.outer = outer_face
        self._cycles: dict[int, list[tuple[int, ...]]] = {}
        self._parts: dict[tuple[int, ...], RegionPartition] = {}

    def cycles(self, length: int) -> list[tuple[int, ...]]:
        if length not in self._cycles:
            self._cycles[length] = find_cycles(self.g, length)
        return self._cycles[length]

    def partition(self, cycle: tuple[int, ...]) -> RegionPartition:
        if cycle not in self._parts:
            self._parts[cycle] = partition_by_cycle(self.g, cycle, self.outer)
        return self._parts[cycle]

    def sides(self, length: int) -> Iterator[tuple[tuple[int, ...], RegionPartition, str]]:
        """Every (cycle, partition, side) with a nonempty vertex set on that side."""
        for c in self.cycles(length):
            p = self.partition(c)
            for side in SIDES:
                if p.vertices(side):
                    yield c, p, side

    @cached_property
    def degree(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.g.rotations)


def _oriented(p: RegionPartition, side: str) -> RegionPartition:
    return p if side == "interior" else p.flipped()


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def _no_triangles(ctx: _Context, r: CheckResult) -> None:
    tri = ctx.cycles(3)
    r.checked = len(tri)
    if tri:
        r.fail(cycle=list(tri[0]))


def _short_cycles_separate(ctx: _Context, r: CheckResult) -> None:
    for length in (3, 4):
        for c in ctx.cycles(length):
            r.checked += 1
            if not is_jordan_separating(ctx.partition(c)):
                r.fail(cycle=list(c))


def _separating_dominates_side(ctx: _Context, r: CheckResult) -> None:
    g = ctx.g
    for length in range(3, 9):
        for c in ctx.cycles(length):
            p = ctx.partition(c)
            if not is_jordan_separating(p):
                continue
            r.checked += 1
            if not (dominates(g, c, p.interior_vertices) or dominates(g, c, p.exterior_vertices)):
                r.fail(cycle=list(c))


def _six_seven_separate(ctx: _Context, r: CheckResult) -> None:
    for length in (6, 7):
        for c in ctx.cycles(length):
            r.checked += 1
            if not is_jordan_separating(ctx.partition(c)):
                r.fail(cycle=list(c))


def _triangle_sides(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(3):
        r.checked += 1
        if dominates(ctx.g, c, p.vertices(side)):
            r.fail(cycle=list(c), side=side)


def _four_cycle_single(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(4):
        r.checked += 1
        for x in c:
            if dominates(ctx.g, (x,), p.vertices(side)):
                r.fail(cycle=list(c), side=side, dominators=[x])


def _four_cycle_adjacent_pair(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(4):
        r.checked += 1
        for i in range(4):
            pair = (c[i], c[(i + 1) % 4])
            if dominates(ctx.g, pair, p.vertices(side)):
                r.fail(cycle=list(c), side=side, dominators=list(pair))


def _five_cycle_small_dominators(ctx: _Context, r: CheckResult) -> None:
    for c in ctx.cycles(5):
        p = ctx.partition(c)
        if not is_jordan_separating(p):
            continue
        for side in SIDES:
            r.checked += 1
            verts = p.vertices(side)
            for i in range(5):
                for dom in ((c[i],), (c[i], c[(i + 1) % 5])):
                    if dominates(ctx.g, dom, verts):
                        r.fail(cycle=list(c), side=side, dominators=list(dom))


def _four_cycle_one_pole_pair(ctx: _Context, r: CheckResult) -> None:
    adj = ctx.g.adjacency
    for c, p, side in ctx.sides(4):
        verts = p.vertices(side)
        if not dominates(ctx.g, c, verts):
            continue
        r.checked += 1
        for i in range(4):
            a, b = c[i], c[(i + 1) % 4]
            if adj[a] & verts and adj[b] & verts:
                r.fail(cycle=list(c), side=side, pair=[a, b])


def _opposite_pairs(c: tuple[int, ...]) -> list[tuple[int, int]]:
    m = len(c)
    return [(c[i], c[j]) for i, j in combinations(range(m), 2) if min(j - i, m - j + i) >= 2]


def _common_neighbour(ctx: _Context, pair: tuple[int, int], verts: frozenset[int]) -> bool:
    adj = ctx.g.adjacency
    return bool(adj[pair[0]] & adj[pair[1]] & verts)


def _six_cycle_chordless(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(6):
        verts = p.vertices(side)
        pairs = [pr for pr in _opposite_pairs(c) if abs(c.index(pr[0]) - c.index(pr[1])) == 3]
        if not any(dominates(ctx.g, pr, verts) for pr in pairs):
            continue
        r.checked += 1
        inside = edges_in_region(ctx.g, p, side)
        on = set(c)
        for u, v in inside:
            if u in on and v in on:
                r.fail(cycle=list(c), side=side, chord=[u, v])


def _six_cycle_common_neighbour(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(6):
        verts = p.vertices(side)
        for pr in _opposite_pairs(c):
            if abs(c.index(pr[0]) - c.index(pr[1])) != 3 or not dominates(ctx.g, pr, verts):
                continue
            r.checked += 1
            if not _common_neighbour(ctx, pr, verts):
                r.fail(cycle=list(c), side=side, dominators=list(pr))


def _five_cycle_common_neighbour(ctx: _Context, r: CheckResult) -> None:
    for c in ctx.cycles(5):
        p = ctx.partition(c)
        if not is_jordan_separating(p):
            continue
        for side in SIDES:
            verts = p.vertices(side)
            for pr in _opposite_pairs(c):
                if not dominates(ctx.g, pr, verts):
                    continue
                r.checked += 1
                if not _common_neighbour(ctx, pr, verts):
                    r.fail(cycle=list(c), side=side, dominators=list(pr))


def _four_cycle_degree_two(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(4):
        verts = p.vertices(side)
        if not dominates(ctx.g, c, verts):
            continue
        r.checked += 1
        for w in sorted(verts):
            if ctx.degree[w] != 2:
                r.fail(cycle=list(c), side=side, vertex=w, degree=ctx.degree[w])


def _four_cycle_structure(ctx: _Context, r: CheckResult) -> None:
    for c, p, side in ctx.sides(4):
        if not dominates(ctx.g, c, p.vertices(side)):
            continue
        r.checked += 1
        try:
            four_cycle_structure(ctx.g, _oriented(p, side), require_pentagulation=False)
        except (StructureViolation, NotDominated) as exc:
            r.fail(cycle=list(c), side=side, error=str(exc))


def _dominating_four_cycle_bound(ctx: _Context, r: CheckResult) -> None:
    g = ctx.g
    delta = max(ctx.degree)
    r.applicable = delta >= 3
    if not r.applicable:
        return
    for c in ctx.cycles(4):
        rest = set(range(g.n)) - set(c)
        if not dominates(g, c, rest):
            continue
        r.checked += 1
        if g.n > 3 * delta - 1:
            r.fail(cycle=list(c), n=g.n, bound=3 * delta - 1)


def _girth5_shells(ctx: _Context, r: CheckResult) -> None:
    g = ctx.g
    adj = g.adjacency
    for v in range(g.n):
        r.checked += 1
        t = bfs(g, v)
        n1, n2 = t.shell(1), t.shell(2)
        if any(adj[x] & n1 for x in n1):
            r.fail(vertex=v, rule="neighbourhood not independent")
        for x in sorted(n2):
            if len(adj[x] & n1) != 1:
                r.fail(vertex=v, rule="second shell vertex without unique first shell neighbour", at=x)
        for x in sorted(n1):
            if not adj[x] & n2:
                r.fail(vertex=v, rule="first shell vertex without second shell neighbour", at=x)


def _girth5_degree_two(ctx: _Context, r: CheckResult) -> None:
    for u, v in ctx.g.edges:
        r.checked += 1
        if ctx.degree[u] == 2 and ctx.degree[v] == 2:
            r.fail(edge=[u, v])


def _no_diameter3_girth5_high_degree(rep: LemmaReport, r: CheckResult) -> None:
    r.checked = 1
    if rep.diameter == 3 and rep.girth == 5 and rep.max_degree >= 8:
        r.fail(n=rep.n, max_degree=rep.max_degree)


def _order_bound(rep: LemmaReport, r: CheckResult) -> None:
    r.checked = 1
    if rep.n > 3 * rep.max_degree - 1:
        r.fail(n=rep.n, bound=3 * rep.max_degree - 1)


def _short_chords_absent(ctx: _Context, r: CheckResult) -> None:
    g = ctx.g
    delta = max(ctx.degree)
    for v in range(g.n):
        if ctx.degree[v] != delta:
            continue
        for k in (1, 2):
            found = k_chords(g, v, k)
            r.checked += 1
            if found:
                r.fail(center=v, chord=list(found[0].path))


def _chord_cycles_separate(ctx: _Context, r: CheckResult) -> None:
    g = ctx.g
    for v in range(g.n):
        if ctx.degree[v] < 8:
            continue
        for k in (1, 2):
            for ch in k_chords(g, v, k):
                r.checked += 1
                try:
                    cu = cycle_under(g, ch)
                except (NonUniqueShellNeighbor, DegenerateCycle) as exc:
                    r.fail(center=v, chord=list(ch.path), error=str(exc))
                    continue
                if not is_jordan_separating(partition_by_cycle(g, cu.cycle, ctx.outer)):
                    r.fail(center=v, chord=list(ch.path), cycle=list(cu.cycle))


# name, applicability predicate on the report, check
_CHECKS: list[tuple[str, Callable[[LemmaReport], bool], Callable]] = [
    ("no_triangles", lambda rep: rep.diameter == 3, _no_triangles),
    ("short_cycles_separate", lambda rep: rep.diameter == 3, _short_cycles_separate),
    ("separating_cycle_dominates_a_side", lambda rep: rep.diameter == 3, _separating_dominates_side),
    ("six_seven_cycles_separate", lambda rep: True, _six_seven_separate),
    ("triangle_sides_not_dominated", lambda rep: True, _triangle_sides),
    ("four_cycle_no_single_dominator", lambda rep: True, _four_cycle_single),
    ("four_cycle_no_adjacent_pair_dominator", lambda rep: True, _four_cycle_adjacent_pair),
    ("five_cycle_no_small_dominator", lambda rep: True, _five_cycle_small_dominators),
    ("four_cycle_dominated_side_one_pole_pair", lambda rep: True, _four_cycle_one_pole_pair),
    ("six_cycle_opposite_pair_chordless", lambda rep: True, _six_cycle_chordless),
    ("six_cycle_opposite_pair_common_neighbour", lambda rep: True, _six_cycle_common_neighbour),
    ("five_cycle_pair_common_neighbour", lambda rep: True, _five_cycle_common_neighbour),
    ("four_cycle_dominated_side_degree_two", lambda rep: True, _four_cycle_degree_two),
    ("four_cycle_structure", lambda rep: True, _four_cycle_structure),
    ("dominating_four_cycle_order_bound", lambda rep: True, _dominating_four_cycle_bound),
    ("girth5_shells", lambda rep: rep.girth == 5, _girth5_shells),
    (
        "girth5_no_adjacent_degree_two",
        lambda rep: rep.girth == 5 and rep.n != 5,
        _girth5_degree_two,
    ),
    (
        "short_chords_absent",
        lambda rep: rep.diameter == 3 and rep.girth == 5 and rep.max_degree >= 8,
        _short_chords_absent,
    ),
    ("chord_cycles_separate", lambda rep: rep.girth == 5 and rep.max_degree >= 8, _chord_cycles_separate),
]

_REPORT_CHECKS: list[tuple[str, Callable[[LemmaReport], bool], Callable]] = [
    ("no_diameter3_girth5_high_degree", lambda rep: True, _no_diameter3_girth5_high_degree),
    ("order_bound", lambda rep: rep.diameter == 3 and rep.max_degree >= 8, _order_bound),
]

CHECK_NAMES: tuple[str, ...] = tuple(name for name, _, _ in _CHECKS + _REPORT_CHECKS)


def lemma_suite(g: PlaneGraph, outer_face: int = 0) -> LemmaReport:
    """Run every structural check on the pentagulation ``g``.

    Checks whose hypotheses do not hold are reported with
    ``applicable=False`` and count as passed.
    """
    if not check_graph(g).is_pentagulation:
        raise NotPentagulation("lemma_suite needs a pentagulation")
    try:
        gi: Optional[int] = girth(g)
    except Acyclic:  # pragma: no cover - pentagulations always have cycles
        gi = None
    rep = LemmaReport(g.n, max_degree(g), diameter(g), gi)
    ctx = _Context(g, outer_face)
    for name, applies, check in _CHECKS:
        r = CheckResult(name)
        r.applicable = applies(rep)
        if r.applicable:
            check(ctx, r)
        rep.checks[name] = r
    for name, applies, check in _REPORT_CHECKS:
        r = CheckResult(name)
        r.applicable = applies(rep)
        if r.applicable:
            check(rep, r)
        rep.checks[name] = r
    rep.separating_face_cycles = [
        list(f.vertices) for f in g.faces if vertex_cut_separates(g, f.vertices)
    ]
    return rep
