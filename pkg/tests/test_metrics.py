import itertools

import pytest

from pentaplane.constructions import build_extremal, build_named, fixture
from pentaplane.metrics import Acyclic, bfs, diameter, distance_matrix, girth, max_degree
from pentaplane.plane import PlaneGraph, VertexOutOfRange, build_graph


def test_bfs_c5():
    for v in range(5):
        assert sorted(bfs(build_named("c5"), v).dist) == [0, 1, 1, 2, 2]


def test_bfs_script_h_eccentricities():
    # the cycle vertices reach everything in two steps; the path vertices
    # are the ones at distance 3 from something
    fx = fixture("script_h")
    ecc = {label: bfs(fx.graph, v).eccentricity for label, v in fx.labels.items()}
    assert ecc == {"v1": 2, "v2": 2, "v3": 2, "v4": 2, "w1": 3, "w2": 3, "z1": 3, "z2": 3}


def test_bfs_dodecahedron():
    g = build_named("dodecahedron")
    assert {bfs(g, v).eccentricity for v in range(g.n)} == {5}


def test_bfs_out_of_range():
    with pytest.raises(VertexOutOfRange):
        bfs(build_named("c5"), 5)


@pytest.mark.parametrize(
    "name, diam, gi, delta",
    [
        ("c5", 2, 5, 2),
        ("script_h", 3, 4, 3),
        ("script_i", 3, 4, 6),
        ("girth5_counterexample", 3, 5, 3),
        ("dodecahedron", 5, 5, 3),
        ("k4", 1, 3, 3),
    ],
)
def test_named_metrics(name, diam, gi, delta):
    g = build_named(name)
    assert (diameter(g), girth(g), max_degree(g)) == (diam, gi, delta)


def test_family_metrics():
    assert diameter(build_extremal(9)) == 3
    assert max_degree(build_extremal(11)) == 11


def test_acyclic():
    path = build_graph(3, [[1], [0, 2], [1]])
    with pytest.raises(Acyclic):
        girth(path)


def _floyd(g: PlaneGraph):
    inf = float("inf")
    d = [[0 if i == j else (1 if j in g.adjacency[i] else inf) for j in range(g.n)] for i in range(g.n)]
    for k, i, j in itertools.product(range(g.n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return [tuple(row) for row in d]


def test_bfs_matches_floyd_warshall(pool11):
    for g in pool11:
        assert distance_matrix(g) == _floyd(g)


def test_edges_change_distance_by_at_most_one(pool11):
    for g in pool11:
        for v in range(g.n):
            dist = bfs(g, v).dist
            assert dist[v] == 0
            assert all(abs(dist[a] - dist[b]) <= 1 for a, b in g.edges)


def test_girth_matches_networkx(pool14):
    import networkx as nx

    for g in pool14[::7]:
        assert girth(g) == nx.girth(nx.Graph(list(g.edges)))


def test_diameter3_girth_is_4_or_5(pool14):
    for g in pool14:
        if diameter(g) == 3:
            assert girth(g) in (4, 5)
