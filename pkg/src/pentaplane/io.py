"""Reading and writing plane graphs.

Two interchange formats round-trip exactly through ``loads``/``dumps``:

* JSON: ``{"n": 5, "rotations": [[1, 4], ...]}``
* text: one line per vertex, neighbour ids separated by single spaces, in
  counterclockwise order.

DOT output is export-only and carries the facial walks as comments.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .plane import PlaneGraph, PlaneGraphError, build_graph


class ParseError(ValueError):
    pass


def to_json(g: PlaneGraph) -> str:
    return json.dumps({"n": g.n, "rotations": [list(r) for r in g.rotations]})


def to_dict(g: PlaneGraph) -> dict:
    return {"n": g.n, "rotations": [list(r) for r in g.rotations]}


def from_dict(data: dict) -> PlaneGraph:
    try:
        n = data["n"]
        rotations = data["rotations"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"graph JSON needs 'n' and 'rotations': {exc}") from exc
    if not isinstance(n, int) or not isinstance(rotations, list):
        raise ParseError("'n' must be an integer and 'rotations' a list")
    if not all(isinstance(r, list) and all(isinstance(u, int) for u in r) for r in rotations):
        raise ParseError("every rotation must be a list of integers")
    try:
        return build_graph(n, rotations)
    except PlaneGraphError as exc:
        raise ParseError(str(exc)) from exc


def to_text(g: PlaneGraph) -> str:
    return "".join(" ".join(map(str, r)) + "\n" for r in g.rotations)


def from_text(text: str) -> PlaneGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty graph file")
    try:
        rotations = [[int(tok) for tok in line.split()] for line in lines]
    except ValueError as exc:
        raise ParseError(f"non-integer token in rotation file: {exc}") from exc
    try:
        return build_graph(len(rotations), rotations)
    except PlaneGraphError as exc:
        raise ParseError(str(exc)) from exc


def loads(text: str) -> PlaneGraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return from_dict(data)
    return from_text(text)


def load(path: Union[str, Path]) -> PlaneGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dumps(g: PlaneGraph, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(g) + "\n"
    if fmt == "rotations":
        return to_text(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}")


def save(g: PlaneGraph, path: Union[str, Path], fmt: str = "json") -> None:
    Path(path).write_text(dumps(g, fmt))


def to_dot(g: PlaneGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for i, f in enumerate(g.faces):
        out.append(f"  // face {i}: " + " ".join(map(str, f.vertices)))
    for v in range(g.n):
        out.append(f"  {v};")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
