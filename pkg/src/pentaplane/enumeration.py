"""Isomorph-free generation of pentagulations.

Pentagulations are grown as *patches*: discs whose inner faces are all
pentagons, bounded by a simple outer cycle.  A child patch glues one new
pentagon onto ``L`` consecutive boundary edges (``1 <= L <= 4``), adding
``4 - L`` fresh vertices.  Whenever the outer boundary has length 5 the
patch is itself a pentagulation.

Duplicates are rejected by canonical augmentation:

* a child is kept only if the pentagon just glued is, up to automorphisms
  of the child fixing its outer face, the canonical removable pentagon;
* moves on one parent are reduced to orbits of the parent's automorphism
  group;
* a closed patch is emitted only if its outer face is, up to automorphisms
  of the pentagulation, its canonical face.

Every pentagulation with ``n`` vertices has ``e = 5(n - 2)/3`` edges, so
only ``n = 5, 8, 11, ...`` occur.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

from .metrics import diameter, girth, max_degree
from .plane import PlaneGraph, best_code

log = logging.getLogger(__name__)

DEFAULT_CAP = 17
CAP_ENV = "PENTAPLANE_CAP"


class CapExceeded(ValueError):
    pass


def hard_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True)
class Filters:
    diameter: Optional[int] = None
    girth_min: Optional[int] = None
    delta_min: Optional[int] = None

    def accepts(self, g: PlaneGraph) -> bool:
        if self.delta_min is not None and max_degree(g) < self.delta_min:
            return False
        if self.girth_min is not None and girth(g) < self.girth_min:
            return False
        if self.diameter is not None and diameter(g) != self.diameter:
            return False
        return True

    def to_dict(self) -> dict:
        return {"diameter": self.diameter, "girth_min": self.girth_min, "delta_min": self.delta_min}


@dataclass(frozen=True)
class EnumerationConfig:
    max_n: int
    filters: Filters = field(default_factory=Filters)
    parallelism: int = 1
    split_depth: int = 3

    def validate(self) -> None:
        cap = hard_cap()
        if self.max_n > cap:
            raise CapExceeded(f"max_n={self.max_n} exceeds the cap of {cap} (set {CAP_ENV})")
        if self.max_n < 1:
            raise ValueError("max_n must be positive")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")

    @property
    def max_faces(self) -> int:
        """Largest number of inner pentagons in a closed patch with n <= max_n."""
        return (2 * self.max_n - 7) // 3


# ---------------------------------------------------------------------------
# patches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Patch:
    """A pentagon disc.

    ``boundary`` lists the outer cycle in the direction in which the outer
    face is traced, so ``boundary[j + 1]`` immediately precedes
    ``boundary[j - 1]`` in the counterclockwise rotation of ``boundary[j]``.
    """

    rotations: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...]
    pentagons: int

    @property
    def n(self) -> int:
        return len(self.rotations)

    def graph(self) -> PlaneGraph:
        return PlaneGraph(len(self.rotations), self.rotations)

    def to_dict(self) -> dict:
        return {
            "rotations": [list(r) for r in self.rotations],
            "boundary": list(self.boundary),
            "pentagons": self.pentagons,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Patch":
        return cls(
            tuple(tuple(r) for r in data["rotations"]),
            tuple(data["boundary"]),
            data["pentagons"],
        )


def root_patch() -> Patch:
    # pentagon 0..4; inner face traced 0,1,2,3,4 and outer face 0,4,3,2,1
    rot = tuple((((i + 1) % 5), (i - 1) % 5) for i in range(5))
    return Patch(rot, (0, 4, 3, 2, 1), 1)


def _next(rot: Sequence[Sequence[int]], u: int, v: int) -> int:
    r = rot[v]
    return r[r.index(u) - 1]


def _glue(patch: Patch, i: int, length: int) -> Optional[tuple[Patch, tuple[int, ...]]]:
    """Glue a pentagon on boundary edges ``i .. i + length - 1``.

    Returns the child and the vertex cycle of the new pentagon, or ``None``
    when the move would create a parallel edge.
    """
    bd = patch.boundary
    b = len(bd)
    path = [bd[(i + j) % b] for j in range(length + 1)]
    start, end = path[0], path[-1]
    if length == 4 and end in patch.rotations[start]:
        return None
    n = patch.n
    fresh = list(range(n, n + 4 - length))
    rot = [list(r) for r in patch.rotations]
    chain = [end, *fresh, start]
    for a, c in zip(chain, chain[1:]):
        if a >= n:
            rot[a].append(c)
        if c >= n:
            rot.append([a]) if c == len(rot) else rot[c].append(a)
    # the new edge at ``end`` goes right before path[-2]; at ``start`` right after path[1]
    r = rot[end]
    r.insert(r.index(path[-2]), chain[1])
    r = rot[start]
    r.insert(r.index(path[1]) + 1, chain[-2])
    rest = [bd[(i + length + j) % b] for j in range(1, b - length)]
    boundary = (start, *reversed(fresh), end, *rest)
    child = Patch(tuple(tuple(x) for x in rot), boundary, patch.pentagons + 1)
    return child, (*path, *fresh)


def _removable(patch: Patch) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Inner pentagons that can be peeled off, leaving a smaller patch.

    Each entry is ``(m, face_vertices, degrees)`` where ``m`` is the number
    of the pentagon's edges on the outer boundary.
    """
    rot = patch.rotations
    bd = patch.boundary
    b = len(bd)
    on_boundary = set(bd)
    faces: dict[frozenset[int], list] = {}
    for j in range(b):
        x, y = bd[j], bd[(j + 1) % b]
        walk = [y, x]
        for _ in range(3):
            walk.append(_next(rot, walk[-2], walk[-1]))
        key = frozenset(walk)
        entry = faces.setdefault(key, [walk, []])
        entry[1].append(j)
    out = []
    for walk, idx in faces.values():
        m = len(idx)
        if m >= 5 or m == b:
            continue
        idx.sort()
        # contiguous on the cyclic boundary: exactly one gap start
        starts = [j for j in idx if (j - 1) % b not in idx]
        if len(starts) != 1:
            continue
        s = starts[0]
        path = {bd[(s + t) % b] for t in range(m + 1)}
        inner_path = [bd[(s + t) % b] for t in range(1, m)]
        if any(len(rot[x]) != 2 for x in inner_path):
            continue
        if any(x in on_boundary for x in walk if x not in path):
            continue
        degs = tuple(sorted(len(rot[x]) for x in walk))
        out.append((m, tuple(walk), degs))
    return out


def _labelled_edges(face: Sequence[int], label: Sequence[int]) -> tuple[tuple[int, int], ...]:
    k = len(face)
    return tuple(
        sorted(
            (min(label[face[t]], label[face[(t + 1) % k]]), max(label[face[t]], label[face[(t + 1) % k]]))
            for t in range(k)
        )
    )


def _outer_starts(patch: Patch) -> list[tuple[int, int, int]]:
    """Root darts on the outer face, in both orientations.

    Only starts from which the cyclic sequence of boundary degrees is
    lexicographically smallest are kept.  That set is mapped to itself by
    every isomorphism, so the best code over it is still canonical and its
    optimal labellings still give every automorphism.
    """
    rot = patch.rotations
    bd = patch.boundary
    b = len(bd)
    deg = [len(rot[x]) for x in bd]
    seqs = []
    for j in range(b):
        fwd = tuple(deg[(j + t) % b] for t in range(b))
        seqs.append((fwd, (bd[j], bd[(j + 1) % b], 0)))
        # reading the boundary backwards from bd[j + 1] matches the mirrored start
        bwd = tuple(deg[(j + 1 - t) % b] for t in range(b))
        seqs.append((bwd, (bd[(j + 1) % b], bd[j], 1)))
    best = min(seq for seq, _ in seqs)
    return [start for seq, start in seqs if seq == best]


def _automorphisms(patch: Patch, labellings: list[list[int]]) -> list[list[int]]:
    """Vertex permutations fixing the outer face, from the optimal labellings."""
    first = labellings[0]
    inv = [0] * len(first)
    for v, lab in enumerate(first):
        inv[lab - 1] = v
    return [[inv[lab[v] - 1] for v in range(len(lab))] for lab in labellings]


class _Node:
    """A patch together with (lazily computed) automorphisms."""

    __slots__ = ("patch", "labellings")

    def __init__(self, patch: Patch, labellings: Optional[list[list[int]]] = None):
        self.patch = patch
        self.labellings = labellings

    def automorphisms(self) -> list[list[int]]:
        if self.labellings is None:
            _, self.labellings = best_code(self.patch.graph(), _outer_starts(self.patch))
        return _automorphisms(self.patch, self.labellings)


def _path_key(path: Sequence[int]) -> tuple[int, ...]:
    t = tuple(path)
    r = t[::-1]
    return t if t <= r else r


def _moves(node: _Node) -> list[tuple[int, int]]:
    """Boundary moves ``(i, L)``, one per orbit of the patch's automorphisms."""
    bd = node.patch.boundary
    b = len(bd)
    autos = node.automorphisms()
    out = []
    for length in range(1, 5):
        if length >= b:
            break
        if len(autos) == 1:
            out.extend((i, length) for i in range(b))
            continue
        for i in range(b):
            path = [bd[(i + j) % b] for j in range(length + 1)]
            key = _path_key(path)
            if all(_path_key([a[x] for x in path]) >= key for a in autos):
                out.append((i, length))
    return out


def _accept_child(child: Patch, new_face: tuple[int, ...]) -> Optional[_Node]:
    removable = _removable(child)
    new_set = frozenset(new_face)
    mine = None
    for m, walk, degs in removable:
        if frozenset(walk) == new_set:
            mine = (m, degs)
    if mine is None:
        raise AssertionError("a freshly glued pentagon must be removable")
    best_inv = min((m, degs) for m, _, degs in removable)
    if mine != best_inv:
        return None
    ties = [walk for m, walk, degs in removable if (m, degs) == best_inv]
    if len(ties) == 1:
        return _Node(child)
    _, labellings = best_code(child.graph(), _outer_starts(child))

    def key(face: Sequence[int]) -> tuple:
        return min(_labelled_edges(face, lab) for lab in labellings)

    if key(new_face) != min(key(w) for w in ties):
        return None
    return _Node(child, labellings)


def _face_inv(rot: Sequence[Sequence[int]], walk: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(len(rot[x]) for x in walk))


def _closed_is_canonical(patch: Patch) -> bool:
    """Whether the outer face of a closed patch lies in the canonical face orbit."""
    g = patch.graph()
    rot = patch.rotations
    outer = g.face_of_dart[(patch.boundary[0], patch.boundary[1])]
    invs = [_face_inv(rot, f.vertices) for f in g.faces]
    target = min(invs)
    if invs[outer] != target:
        return False
    ties = [i for i, inv in enumerate(invs) if inv == target]
    if len(ties) == 1:
        return True
    codes = {}
    for i in ties:
        darts = g.faces[i].darts
        starts = [(u, v, 0) for u, v in darts] + [(v, u, 1) for u, v in darts]
        codes[i] = best_code(g, starts)[0]
    return codes[outer] == min(codes.values())


def _viable_shape(n: int, b: int, pentagons: int, cfg: EnumerationConfig) -> bool:
    if n > cfg.max_n:
        return False
    # each gluing shortens the boundary by at most 3
    remaining = 0 if b == 5 else max(1, -(-(b - 5) // 3))
    return pentagons + remaining <= cfg.max_faces


def _viable(patch: Patch, cfg: EnumerationConfig) -> bool:
    return _viable_shape(patch.n, len(patch.boundary), patch.pentagons, cfg)


def _children(node: _Node, cfg: EnumerationConfig) -> Iterator[_Node]:
    patch = node.patch
    b = len(patch.boundary)
    for i, length in _moves(node):
        if not _viable_shape(patch.n + 4 - length, b + 5 - 2 * length, patch.pentagons + 1, cfg):
            continue
        glued = _glue(patch, i, length)
        if glued is None:
            continue
        child, face = glued
        accepted = _accept_child(child, face)
        if accepted is not None:
            yield accepted


def _emit(patch: Patch, cfg: EnumerationConfig) -> Optional[PlaneGraph]:
    if len(patch.boundary) != 5 or not _closed_is_canonical(patch):
        return None
    g = patch.graph()
    return g if cfg.filters.accepts(g) else None


def _walk(node: _Node, cfg: EnumerationConfig) -> Iterator[PlaneGraph]:
    stack = [node]
    while stack:
        cur = stack.pop()
        g = _emit(cur.patch, cfg)
        if g is not None:
            yield g
        kids = list(_children(cur, cfg))
        stack.extend(reversed(kids))


def _subtree(args: tuple[dict, EnumerationConfig]) -> list[dict]:
    data, cfg = args
    node = _Node(Patch.from_dict(data))
    return [{"n": g.n, "rotations": [list(r) for r in g.rotations]} for g in _walk(node, cfg)]


def _frontier(cfg: EnumerationConfig) -> tuple[list[PlaneGraph], list[Patch]]:
    """Expand the first ``split_depth`` levels; return their output and the cut."""
    shallow: list[PlaneGraph] = []
    level = [_Node(root_patch())] if _viable(root_patch(), cfg) else []
    for _ in range(cfg.split_depth):
        nxt = []
        for node in level:
            g = _emit(node.patch, cfg)
            if g is not None:
                shallow.append(g)
            nxt.extend(_children(node, cfg))
        level = nxt
    return shallow, [node.patch for node in level]


def enumerate_pentagulations(
    cfg: EnumerationConfig,
    resume: Optional[Path] = None,
    on_progress: Optional[Callable[[int, int], None]] = None,
) -> Iterator[PlaneGraph]:
    """Yield one representative of every pentagulation class with ``n <= max_n``.

    The search tree is cut at ``split_depth``; the subtrees below the cut are
    independent and are processed in order, by ``parallelism`` worker
    processes when that exceeds one.  The stream is identical for every
    worker count.  With ``resume``, the cut and the set of finished subtrees
    are kept in that file so an interrupted run can skip completed work.
    """
    cfg.validate()
    state = _load_state(resume, cfg) if resume else None
    if state is None:
        shallow, frontier = _frontier(cfg)
        state = {
            "version": 1,
            "max_n": cfg.max_n,
            "filters": cfg.filters.to_dict(),
            "split_depth": cfg.split_depth,
            "frontier": [p.to_dict() for p in frontier],
            "done": [False] * len(frontier),
        }
        # the levels above the cut are cheap; an interruption here restarts
        yield from shallow
        _save_state(resume, state)
    todo = [i for i, done in enumerate(state["done"]) if not done]
    log.debug("frontier of %d subtrees, %d to do", len(state["done"]), len(todo))
    jobs = [(state["frontier"][i], cfg) for i in todo]
    if cfg.parallelism > 1 and len(jobs) > 1:
        pool = ProcessPoolExecutor(max_workers=cfg.parallelism)
        try:
            results = pool.map(_subtree, jobs, chunksize=1)
            yield from _drain(results, todo, state, resume, on_progress)
        finally:
            # a consumer that stops early should not wait for queued subtrees
            pool.shutdown(wait=True, cancel_futures=True)
    else:
        yield from _drain(map(_subtree, jobs), todo, state, resume, on_progress)


def _drain(results, todo, state, resume, on_progress) -> Iterator[PlaneGraph]:
    for count, (i, graphs) in enumerate(zip(todo, results), start=1):
        for data in graphs:
            yield PlaneGraph(data["n"], tuple(tuple(r) for r in data["rotations"]))
        state["done"][i] = True
        _save_state(resume, state)
        if on_progress:
            on_progress(count, len(todo))


def _save_state(path: Optional[Path], state: dict) -> None:
    if path is None:
        return
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(json.dumps(state))
    tmp.replace(path)


def _load_state(path: Path, cfg: EnumerationConfig) -> Optional[dict]:
    path = Path(path)
    if not path.exists():
        return None
    state = json.loads(path.read_text())
    if (
        state.get("max_n") != cfg.max_n
        or state.get("split_depth") != cfg.split_depth
        or state.get("filters") != cfg.filters.to_dict()
    ):
        raise ValueError(f"resume file {path} was written for a different configuration")
    return state


# ---------------------------------------------------------------------------
# theorem sweep
# ---------------------------------------------------------------------------


@dataclass
class Tally:
    graphs_checked: int = 0
    violations: int = 0
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    config: EnumerationConfig
    tallies: dict[str, Tally]
    graphs: int = 0
    by_order: dict[int, int] = field(default_factory=dict)
    by_diameter: dict[int, int] = field(default_factory=dict)
    max_degree_seen: int = 0
    girth5_diameter3: int = 0
    girth5_diameter3_max_degree: Optional[int] = None
    halted: bool = False

    @property
    def violations(self) -> int:
        return sum(t.violations for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        from .lemmas import REPORT_SCHEMA_VERSION

        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "max_n": self.config.max_n,
            "filters": self.config.filters.to_dict(),
            "graphs": self.graphs,
            "by_order": {str(k): v for k, v in sorted(self.by_order.items())},
            "by_diameter": {str(k): v for k, v in sorted(self.by_diameter.items())},
            "max_degree_seen": self.max_degree_seen,
            "girth5_diameter3": {
                "graphs": self.girth5_diameter3,
                "max_degree": self.girth5_diameter3_max_degree,
            },
            "violations": self.violations,
            "ok": self.ok,
            "halted": self.halted,
            "checks": {name: t.to_dict() for name, t in self.tallies.items()},
        }


def verify_theorems(
    cfg: EnumerationConfig,
    resume: Optional[Path] = None,
    outer_face: int = 0,
) -> VerificationReport:
    """Run the lemma suite over every enumerated pentagulation.

    Stops at the first graph that breaks a check; that graph and the broken
    check's witness are kept in the report.
    """
    from .io import to_dict
    from .lemmas import CHECK_NAMES, lemma_suite

    report = VerificationReport(cfg, {name: Tally() for name in CHECK_NAMES})
    for g in enumerate_pentagulations(cfg, resume=resume):
        rep = lemma_suite(g, outer_face)
        report.graphs += 1
        report.by_order[g.n] = report.by_order.get(g.n, 0) + 1
        report.by_diameter[rep.diameter] = report.by_diameter.get(rep.diameter, 0) + 1
        report.max_degree_seen = max(report.max_degree_seen, rep.max_degree)
        if rep.girth == 5 and rep.diameter == 3:
            report.girth5_diameter3 += 1
            prev = report.girth5_diameter3_max_degree or 0
            report.girth5_diameter3_max_degree = max(prev, rep.max_degree)
        for name, res in rep.checks.items():
            t = report.tallies[name]
            if res.applicable:
                t.graphs_checked += 1
            if not res.passed:
                t.violations += 1
                if t.witness is None:
                    t.witness = {"graph": to_dict(g), "detail": res.witness}
        if not rep.all_passed:
            report.halted = True
            break
    return report
