"""Distances, shells, diameter, girth and degrees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .plane import PlaneGraph, VertexOutOfRange


class Acyclic(ValueError):
    pass


@dataclass(frozen=True)
class DistanceTable:
    source: int
    dist: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return max(self.dist)

    def shell(self, i: int) -> frozenset[int]:
        """``N_i(source)``: the vertices at distance exactly ``i``."""
        return frozenset(u for u, d in enumerate(self.dist) if d == i)


def bfs(g: PlaneGraph, v: int) -> DistanceTable:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.rotations[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return DistanceTable(v, tuple(dist))


def distance_matrix(g: PlaneGraph) -> list[tuple[int, ...]]:
    return [bfs(g, v).dist for v in range(g.n)]


def diameter(g: PlaneGraph) -> int:
    return max(bfs(g, v).eccentricity for v in range(g.n))


def girth(g: PlaneGraph) -> int:
    """Length of a shortest cycle, by BFS from every vertex.

    A non-tree edge ``xy`` met during the search from ``s`` closes a closed
    walk of length ``d(x) + d(y) + 1``; the minimum over all sources is the
    girth.
    """
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                break
            for y in g.rotations[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise Acyclic("graph has no cycle")
    return best


def max_degree(g: PlaneGraph) -> int:
    return max(len(r) for r in g.rotations)


def degrees(g: PlaneGraph) -> tuple[int, ...]:
    return tuple(len(r) for r in g.rotations)
