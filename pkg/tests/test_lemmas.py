import json

import pytest

from pentaplane.constructions import Drawing, build_extremal, build_named
from pentaplane.lemmas import (
    CHECK_NAMES,
    REPORT_SCHEMA_VERSION,
    CheckResult,
    LemmaReport,
    _Context,
    _four_cycle_degree_two,
    _four_cycle_single,
    _girth5_degree_two,
    _no_diameter3_girth5_high_degree,
    _no_triangles,
    _order_bound,
    _short_cycles_separate,
    _triangle_sides,
    lemma_suite,
)
from pentaplane.regions import NotPentagulation


def _wheel4():
    coords = {"a": (0, 0), "b": (2, 0), "c": (2, 2), "d": (0, 2), "h": (1, 1)}
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")] + [(x, "h") for x in "abcd"]
    return Drawing(coords, edges).embed("wheel4")


@pytest.mark.parametrize("name", ["c5", "script_h", "script_i", "girth5_counterexample", "dodecahedron"])
def test_fixtures_pass(name):
    rep = lemma_suite(build_named(name))
    assert rep.all_passed, [c.to_dict() for c in rep.failures]
    assert set(rep.checks) == set(CHECK_NAMES)


def test_script_i_order_and_checks():
    rep = lemma_suite(build_named("script_i"))
    assert rep.n == 11 and rep.n <= 3 * rep.max_degree - 1
    assert rep["no_triangles"].applicable and rep["no_triangles"].checked == 0
    assert rep["four_cycle_structure"].checked > 0
    assert not rep["girth5_shells"].applicable


def test_extremal_graphs_pass():
    for delta in (3, 5, 7, 9):
        rep = lemma_suite(build_extremal(delta))
        assert rep.all_passed
        assert rep.to_dict()["order_bound"] == {"bound": 3 * delta - 1, "holds": True}


def test_high_degree_checks_only_apply_at_eight():
    rep = lemma_suite(build_extremal(9))
    assert rep["short_chords_absent"].applicable is False  # girth 4
    assert rep["order_bound"].applicable and rep["order_bound"].passed


def test_every_outer_face_same_verdict():
    g = build_named("script_i")
    for f in range(len(g.faces)):
        assert lemma_suite(g, outer_face=f).all_passed


def test_rejects_non_pentagulation():
    with pytest.raises(NotPentagulation):
        lemma_suite(build_named("k4"))


def test_json_report():
    doc = json.loads(lemma_suite(build_named("script_h")).to_json())
    assert doc["schema_version"] == REPORT_SCHEMA_VERSION == 1
    assert {"n", "max_degree", "diameter", "girth", "order_bound", "all_passed", "checks"} <= set(doc)
    assert [c["name"] for c in doc["checks"]] == list(CHECK_NAMES)
    assert set(doc["checks"][0]) == {"name", "applicable", "passed", "checked", "witness"}


def test_first_witness_kept():
    r = CheckResult("x")
    r.fail(a=1)
    r.fail(a=2)
    assert not r.passed and r.witness == {"a": 1}


# the checks themselves must be able to fail; feed them graphs that break them


def test_triangle_checks_fire_on_k4():
    ctx = _Context(build_named("k4"), 0)
    r = CheckResult("no_triangles")
    _no_triangles(ctx, r)
    assert not r.passed and r.checked == 4
    r = CheckResult("triangle_sides_not_dominated")
    _triangle_sides(ctx, r)
    assert not r.passed


def test_short_cycle_separation_fires_on_face():
    # every 3-cycle of K4 bounds a face, so none separates
    r = CheckResult("short_cycles_separate")
    _short_cycles_separate(_Context(build_named("k4"), 0), r)
    assert not r.passed


def test_four_cycle_checks_fire_on_wheel():
    fx = _wheel4()
    ctx = _Context(fx.graph, fx.outer_face)
    r = CheckResult("four_cycle_no_single_dominator")
    _four_cycle_single(ctx, r)
    assert not r.passed
    r = CheckResult("four_cycle_dominated_side_degree_two")
    _four_cycle_degree_two(ctx, r)
    assert not r.passed and r.witness["vertex"] == fx["h"] and r.witness["degree"] == 4


def test_adjacent_degree_two_fires_on_c5():
    r = CheckResult("girth5_no_adjacent_degree_two")
    _girth5_degree_two(_Context(build_named("c5"), 0), r)
    assert not r.passed


def test_report_level_checks_fire():
    rep = LemmaReport(n=30, max_degree=8, diameter=3, girth=5)
    r = CheckResult("order_bound")
    _order_bound(rep, r)
    assert not r.passed and r.witness == {"n": 30, "bound": 23}
    r = CheckResult("no_diameter3_girth5_high_degree")
    _no_diameter3_girth5_high_degree(rep, r)
    assert not r.passed


def test_sweep_pool(pool14):
    for g in pool14:
        rep = lemma_suite(g)
        assert rep.all_passed, (g.rotations, [c.to_dict() for c in rep.failures])
