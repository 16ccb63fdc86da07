import pytest

from oracles import k_chords_bruteforce, sides_by_parity
from pentaplane.chords import (
    MAX_CHORD_LENGTH,
    Chord,
    DegenerateCycle,
    NonUniqueShellNeighbor,
    UnsupportedChordLength,
    cycle_under,
    face_star,
    is_minimal_chord,
    k_chords,
    short_chord_census,
)
from pentaplane.constructions import Drawing, build_extremal, build_named, extremal_fixture, fixture
from pentaplane.metrics import max_degree
from pentaplane.plane import VertexOutOfRange
from pentaplane.regions import dominates


@pytest.fixture(scope="module")
def fig():
    return fixture("chord_fixture")


def _labels(fx, seq):
    inv = {v: k for k, v in fx.labels.items()}
    return [inv[x] for x in seq]


def _edge(fx, a, b):
    x, y = fx.ids(a, b)
    return (min(x, y), max(x, y))


def test_face_star_c5():
    g = build_named("c5")
    star = face_star(g, 0)
    assert star.vertices == set(range(5))
    assert star.edges == set(g.edges)


def test_face_star_contains_neighbourhood(pool11):
    for g in pool11[::4]:
        for v in range(g.n):
            star = face_star(g, v)
            assert v in star.vertices and g.adjacency[v] <= star.vertices


def test_face_star_out_of_range():
    with pytest.raises(VertexOutOfRange):
        face_star(build_named("c5"), 9)


def test_figure_face_star(fig):
    star = face_star(fig.graph, fig["v"]).edges
    assert _edge(fig, "w1", "w2") in star
    assert _edge(fig, "w1", "w5") not in star


def test_figure_chords(fig):
    v = fig["v"]
    ones = [_labels(fig, c.path) for c in k_chords(fig.graph, v, 1)]
    twos = [_labels(fig, c.path) for c in k_chords(fig.graph, v, 2)]
    assert ones == [["w1", "w5"]]
    assert twos == [["w5", "z", "w8"]]


def test_figure_cycles_under(fig):
    v = fig["v"]
    (p,) = k_chords(fig.graph, v, 1)
    (q,) = k_chords(fig.graph, v, 2)
    assert _labels(fig, cycle_under(fig.graph, p).cycle) == ["w1", "w5", "u3", "v", "u1"]
    assert _labels(fig, cycle_under(fig.graph, q).cycle) == ["w5", "z", "w8", "u5", "v", "u3"]


def test_chord_length_limits(fig):
    with pytest.raises(UnsupportedChordLength):
        k_chords(fig.graph, fig["v"], 0)
    with pytest.raises(UnsupportedChordLength):
        k_chords(fig.graph, fig["v"], MAX_CHORD_LENGTH + 1)
    with pytest.raises(UnsupportedChordLength):
        cycle_under(fig.graph, Chord(fig["v"], fig.ids("w1", "w5", "z", "w8")))


def test_c5_no_chords():
    assert k_chords(build_named("c5"), 0, 1) == []
    census = short_chord_census(build_named("c5"), 0)
    assert (census.count_1chords, census.count_2chords) == (0, 0)


def test_non_unique_shell_neighbour():
    # in G(3) the far pole has two neighbours adjacent to the near pole
    fx = extremal_fixture(3)
    g = fx.graph
    with pytest.raises(NonUniqueShellNeighbor):
        cycle_under(g, Chord(fx["v1"], (fx["v3"], fx["v3"])))


def test_degenerate_cycle():
    # a chord whose ends share their first-shell neighbour
    g = build_named("girth5_counterexample")
    for v in range(g.n):
        for c in k_chords(g, v, 2):
            try:
                cycle_under(g, c)
            except DegenerateCycle:
                return
            except NonUniqueShellNeighbor:
                continue
    # no degenerate chord in this graph; construct one directly
    fx = fixture("chord_fixture")
    with pytest.raises(DegenerateCycle):
        cycle_under(fx.graph, Chord(fx["v"], fx.ids("w6", "w5")))


def test_k_chords_match_bruteforce(pool11):
    for g in pool11:
        rot = [list(r) for r in g.rotations]
        for v in range(g.n):
            for k in range(1, MAX_CHORD_LENGTH + 1):
                assert [c.path for c in k_chords(g, v, k)] == k_chords_bruteforce(rot, v, k)


def test_counterexample_census_and_minimality():
    g = build_named("girth5_counterexample")
    delta = max_degree(g)
    rot = [list(r) for r in g.rotations]
    for v in (x for x in range(g.n) if len(g.rotations[x]) == delta):
        census = short_chord_census(g, v)
        assert census.count_1chords == len(k_chords_bruteforce(rot, v, 1))
        assert census.count_2chords == len(k_chords_bruteforce(rot, v, 2))
        cus = []
        for k in (1, 2):
            for c in k_chords(g, v, k):
                try:
                    cus.append(cycle_under(g, c))
                except (NonUniqueShellNeighbor, DegenerateCycle):
                    pass
        for cu in cus:
            fi, _, vi, _ = sides_by_parity(rot, cu.cycle, 0)
            dominated = all(g.adjacency[w] & set(cu.cycle) for w in vi)
            nested = any(
                o.chord.k == cu.chord.k
                and o.chord != cu.chord
                and sides_by_parity(rot, o.cycle, 0)[0] < fi
                for o in cus
            )
            assert is_minimal_chord(g, cu, 0) == (dominated and not nested)


def test_minimal_with_empty_interior():
    # C_Q = x, y, uy, v, ux with the edge ux-uy drawn inside it, so that side
    # holds no vertex; t keeps the chord xy off every face at v
    coords = {"v": (0, 0), "ux": (-1, 1), "uy": (1, 1), "x": (-1, 2), "y": (1, 2), "s": (0, -1), "t": (0, 4)}
    edges = [
        ("v", "ux"), ("v", "uy"), ("ux", "x"), ("uy", "y"), ("x", "y"), ("ux", "uy"),
        ("v", "s"), ("s", "t"), ("t", "x"), ("t", "y"),
    ]
    bends = {("s", "t"): [(3, -1), (3, 4)]}
    fx = Drawing(coords, edges, bends).embed("empty_interior")
    g = fx.graph
    (q,) = k_chords(g, fx["v"], 1)
    assert q.path == tuple(sorted(fx.ids("x", "y")))
    cu = cycle_under(g, q)
    from pentaplane.regions import partition_by_cycle

    part = partition_by_cycle(g, cu.cycle, fx.outer_face)
    assert part.interior_vertices == frozenset()
    assert is_minimal_chord(g, cu, fx.outer_face)


def test_g9_pole_census():
    fx = extremal_fixture(9)
    census = short_chord_census(fx.graph, fx["v1"])
    rot = [list(r) for r in fx.graph.rotations]
    assert census.count_1chords == len(k_chords_bruteforce(rot, fx["v1"], 1))
    assert census.count_2chords == len(k_chords_bruteforce(rot, fx["v1"], 2))
    assert census.to_dict()["center"] == fx["v1"]
