import pytest

from pentaplane import io
from pentaplane.constructions import build_named


@pytest.mark.parametrize("name", ["c5", "script_h", "script_i", "dodecahedron", "disloc_h"])
@pytest.mark.parametrize("fmt", ["json", "rotations"])
def test_round_trip_exact(name, fmt, tmp_path):
    g = build_named(name)
    path = tmp_path / f"g.{fmt}"
    io.save(g, path, fmt)
    text = path.read_text()
    back = io.load(path)
    assert back == g
    assert io.dumps(back, fmt) == text


def test_json_shape():
    assert io.to_dict(build_named("c5"))["n"] == 5
    assert io.loads('{"n": 2, "rotations": [[1], [0]]}').edge_count == 1


@pytest.mark.parametrize(
    "text",
    ["", "{not json", '{"n": 2}', '{"n": "x", "rotations": []}', "1 a\n", '{"n": 2, "rotations": [[1], []]}'],
)
def test_parse_errors(text):
    with pytest.raises(io.ParseError):
        io.loads(text)


def test_missing_file(tmp_path):
    with pytest.raises(io.ParseError):
        io.load(tmp_path / "absent.json")


def test_unknown_format():
    with pytest.raises(ValueError):
        io.dumps(build_named("c5"), "svg")


def _dot_counts(text):
    lines = [ln.strip() for ln in text.splitlines()]
    faces = sum(ln.startswith("// face") for ln in lines)
    edges = sum("--" in ln and not ln.startswith("//") for ln in lines)
    nodes = sum(ln.endswith(";") and "--" not in ln for ln in lines)
    return nodes, edges, faces


def test_dot_c5():
    assert _dot_counts(io.to_dot(build_named("c5")))[:2] == (5, 5)


def test_dot_script_h():
    assert _dot_counts(io.to_dot(build_named("script_h"))) == (8, 10, 4)
