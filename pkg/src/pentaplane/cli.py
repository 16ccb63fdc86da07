"""Command-line front end.

Reports go to standard output as JSON, diagnostics to standard error.
Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
3 a checked property was violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .constructions import NAMES, DeltaTooSmall, EvenDelta, build_extremal, build_named
from .enumeration import (
    CapExceeded,
    EnumerationConfig,
    Filters,
    enumerate_pentagulations,
    verify_theorems,
)
from .lemmas import REPORT_SCHEMA_VERSION
from .metrics import diameter, girth, max_degree
from .plane import PlaneGraph, PlaneGraphError, canonical_code, check_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3

log = logging.getLogger("pentaplane")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps({"schema_version": REPORT_SCHEMA_VERSION, **doc}, indent=2) + "\n")


def _summary(g: PlaneGraph) -> dict:
    rep = check_graph(g)
    out = rep.to_dict()
    if rep.is_two_connected:
        out["diameter"] = diameter(g)
        out["girth"] = girth(g)
    out["max_degree"] = max_degree(g)
    out["canonical_code"] = canonical_code(g).hex()
    return out


def _write_graph(g: PlaneGraph, output: Optional[Path], fmt: str) -> None:
    if output is None:
        return
    io.save(g, output, fmt)
    log.info("wrote %s", output)


def _config(args: argparse.Namespace) -> EnumerationConfig:
    filters = Filters(args.diameter, args.girth_min, args.delta_min)
    cfg = EnumerationConfig(max_n=args.max_n, filters=filters, parallelism=args.jobs)
    try:
        cfg.validate()
    except (CapExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return cfg


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        g = io.load(args.path)
    except io.ParseError as exc:
        if isinstance(exc.__cause__, PlaneGraphError):
            _emit({"command": "validate", "valid": False, "error": str(exc)})
            return EXIT_INVALID
        raise
    doc = _summary(g)
    _emit({"command": "validate", "valid": True, **doc})
    return EXIT_OK if doc["is_pentagulation"] else EXIT_INVALID


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    report = verify_theorems(cfg, resume=args.resume)
    _emit({"command": "verify", **report.to_dict()})
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_family(args: argparse.Namespace) -> int:
    if args.delta is None:
        raise UsageError("family needs --delta")
    try:
        g = build_extremal(args.delta)
    except (EvenDelta, DeltaTooSmall) as exc:
        raise UsageError(str(exc)) from exc
    _write_graph(g, args.output, args.format)
    _emit(
        {
            "command": "family",
            "delta": args.delta,
            "n": g.n,
            "max_degree": max_degree(g),
            "diameter": diameter(g),
            "canonical_code": canonical_code(g).hex(),
            "graph": io.to_dict(g),
        }
    )
    return EXIT_OK


def cmd_fixture(args: argparse.Namespace) -> int:
    try:
        g = build_named(args.name)
    except KeyError as exc:
        raise UsageError(f"unknown fixture {args.name!r}; choose from {', '.join(NAMES)}") from exc
    _write_graph(g, args.output, args.format)
    _emit({"command": "fixture", "name": args.name, **_summary(g), "graph": io.to_dict(g)})
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = io.load(args.path)
    text = io.dumps(g, args.format)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    sink = open(args.output, "w") if args.output else sys.stdout
    count = 0
    try:
        for g in enumerate_pentagulations(cfg, resume=args.resume):
            sink.write(io.to_json(g) + "\n")
            count += 1
    finally:
        if args.output:
            sink.close()
    log.info("%d pentagulations", count)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pentaplane", description="Analyse and enumerate pentagulations.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def enum_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--max-n", type=int, required=True)
        sp.add_argument("--diameter", type=int)
        sp.add_argument("--girth-min", type=int)
        sp.add_argument("--delta-min", type=int)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--resume", type=Path, help="frontier file to resume from")

    sp = sub.add_parser("validate", help="check a graph file")
    sp.add_argument("path", type=Path)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("verify", help="run the structural checks over an enumeration")
    enum_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="stream pentagulations as JSON lines")
    enum_flags(sp)
    sp.add_argument("--output", type=Path)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("family", help="build the extremal graph for an odd maximum degree")
    sp.add_argument("--delta", type=int)
    sp.add_argument("--output", type=Path)
    sp.add_argument("--format", choices=("json", "rotations", "dot"), default="json")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("fixture", help="build a named graph")
    sp.add_argument("name")
    sp.add_argument("--output", type=Path)
    sp.add_argument("--format", choices=("json", "rotations", "dot"), default="json")
    sp.set_defaults(func=cmd_fixture)

    sp = sub.add_parser("export", help="convert a graph file")
    sp.add_argument("path", type=Path)
    sp.add_argument("--format", choices=("json", "rotations", "dot"), default="dot")
    sp.add_argument("--output", type=Path)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
