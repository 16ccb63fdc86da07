import json

import pytest

from pentaplane import io
from pentaplane.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from pentaplane.constructions import build_named
from pentaplane.plane import canonical_code


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    return doc


@pytest.fixture
def graph_file(tmp_path):
    def make(name, fmt="json"):
        path = tmp_path / f"{name}.{fmt}"
        io.save(build_named(name), path, fmt)
        return path

    return make


def test_validate_c5(capsys, graph_file):
    code, out, _ = run(capsys, "validate", graph_file("c5"))
    assert code == EXIT_OK
    assert report(out)["is_pentagulation"]


def test_validate_k4(capsys, graph_file):
    code, out, _ = run(capsys, "validate", graph_file("k4"))
    assert code == EXIT_INVALID
    assert report(out)["is_pentagulation"] is False


def test_validate_script_i(capsys, graph_file):
    code, out, _ = run(capsys, "validate", graph_file("script_i", "rotations"))
    assert code == EXIT_OK
    assert report(out)["diameter"] == 3


def test_validate_missing_and_garbage(capsys, tmp_path):
    code, out, err = run(capsys, "validate", tmp_path / "nope.json")
    assert code == EXIT_USAGE and out == "" and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "validate", bad)[0] == EXIT_USAGE


def test_validate_unembeddable(capsys, tmp_path):
    # a rotation that is not symmetric cannot be a graph
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "rotations": [[1], [2], [0]]}))
    code, out, _ = run(capsys, "validate", bad)
    assert code == EXIT_INVALID
    assert report(out)["valid"] is False


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", 8)
    doc = report(out)
    assert code == EXIT_OK and doc["ok"] and doc["graphs"] == 4


def test_verify_girth5_diameter3(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", 11, "--girth-min", 5, "--diameter", 3)
    doc = report(out)
    assert code == EXIT_OK
    # six classes; the largest degree among them is 5, inside the allowed range
    assert doc["graphs"] == 6
    assert doc["girth5_diameter3"] == {"graphs": 6, "max_degree": 5}


def test_verify_cap(capsys, monkeypatch):
    monkeypatch.delenv("PENTAPLANE_CAP", raising=False)
    code, out, err = run(capsys, "verify", "--max-n", 99)
    assert code == EXIT_USAGE and out == "" and "cap" in err.lower()


def test_verify_violation_exit(capsys, monkeypatch):
    import pentaplane.cli as cli

    class Broken:
        ok = False

        def to_dict(self):
            return {"ok": False, "violations": 1}

    monkeypatch.setattr(cli, "verify_theorems", lambda cfg, resume=None: Broken())
    assert run(capsys, "verify", "--max-n", 5)[0] == EXIT_VIOLATION


def test_family(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "--delta", 9)
    doc = report(out)
    assert code == EXIT_OK and doc["n"] == 26 and doc["diameter"] == 3 and doc["delta"] == 9
    path = tmp_path / "g3.json"
    code, out, _ = run(capsys, "family", "--delta", 3, "--output", path)
    assert code == EXIT_OK
    assert canonical_code(io.load(path)) == canonical_code(build_named("script_h"))


@pytest.mark.parametrize("delta", ["6", "1"])
def test_family_bad_delta(capsys, delta):
    assert run(capsys, "family", "--delta", delta)[0] == EXIT_USAGE


def test_fixture(capsys):
    code, out, _ = run(capsys, "fixture", "script_h")
    doc = report(out)
    assert code == EXIT_OK and doc["name"] == "script_h" and doc["n"] == 8
    assert run(capsys, "fixture", "nonsense")[0] == EXIT_USAGE


def _dot_counts(text):
    lines = [ln.strip() for ln in text.splitlines()]
    edges = sum(1 for ln in lines if "--" in ln and not ln.startswith("//"))
    nodes = sum(1 for ln in lines if ln.endswith(";") and "--" not in ln and ln[0].isdigit())
    faces = sum(1 for ln in lines if ln.startswith("// face"))
    return nodes, edges, faces


def test_export_dot(capsys, graph_file):
    code, out, _ = run(capsys, "export", graph_file("c5"))
    assert code == EXIT_OK
    assert _dot_counts(out) == (5, 5, 2)
    code, out, _ = run(capsys, "export", graph_file("script_h"))
    assert _dot_counts(out) == (8, 10, 4)


@pytest.mark.parametrize("fmt", ["json", "rotations"])
def test_export_round_trip(capsys, graph_file, tmp_path, fmt):
    src = graph_file("script_i")
    dest = tmp_path / f"copy.{fmt}"
    assert run(capsys, "export", src, "--format", fmt, "--output", dest)[0] == EXIT_OK
    assert io.load(dest).rotations == io.load(src).rotations


def test_export_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("zzz")
    assert run(capsys, "export", bad)[0] == EXIT_USAGE


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--max-n", 8)
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 4
    assert {io.from_dict(json.loads(ln)).n for ln in lines} == {5, 8}
    path = tmp_path / "all.jsonl"
    run(capsys, "enumerate", "--max-n", 11, "--diameter", 3, "--output", path, "--jobs", 2)
    assert len(path.read_text().splitlines()) == 14


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "verify")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--max-n", 8, "--jobs", 0)[0] == EXIT_USAGE


def test_deterministic(capsys):
    a = run(capsys, "verify", "--max-n", 8)[1]
    b = run(capsys, "verify", "--max-n", 8)[1]
    assert a == b
