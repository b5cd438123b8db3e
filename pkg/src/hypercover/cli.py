"""Command-line interface.

Commands cover the library surface: ``check-cover``, ``minimalize``,
``gen``, ``find-omega``, plus ``enumerate`` and ``check-nm`` for
exploration.  Exit codes are uniform: 0 for a positive verdict, 1 for a
negative verdict or a failed algorithm precondition, 2 for parse or usage
errors.  ``--json`` switches every command to a single machine-readable
document carrying enough data to re-verify the verdict offline.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import __version__
from .core import FiniteHypergraph
from .corpus import random_hypergraph
from .countable import (
    ConstructionTrace,
    find_omega_witness,
    gen_domotor,
    gen_lattice_lines,
    gen_omega,
    local_construction,
    truncate,
    validate_omega_witness,
)
from .covers import Cover, enumerate_minimal_covers, greedy_minimalize, is_cover, is_minimal_cover
from .errors import NotACover, ParseError, SizeLimit
from .files import parse_hypergraph, serialize_hypergraph
from .structured import NmParams, bounded_width_cover, check_nm, point_finite_cover


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> tuple[FiniteHypergraph, str]:
    text = _read_input(path)
    return parse_hypergraph(text), hashlib.sha256(text.encode()).hexdigest()


def _emit(args, lines: list[str], verdict: str, payload: dict, digest: str | None) -> None:
    if args.json:
        doc = {
            "command": args.command_echo,
            "input_sha256": digest,
            "result": payload,
            "verdict": verdict,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"verdict: {verdict}")


def _trace_payload(trace: ConstructionTrace) -> list[dict]:
    return [
        {
            "step": s.step,
            "pivot": s.pivot,
            "remaining": sorted(s.remaining),
            "blocked": sorted(s.blocked),
            "local_edges": [sorted(e) for e in s.local_hypergraph.edges],
            "local_cover": sorted(s.local_cover),
            "lifted": sorted(s.lifted),
        }
        for s in trace.steps
    ]


# -- commands ---------------------------------------------------------------


def cmd_check_cover(args) -> int:
    h, digest = _load(args.file)
    try:
        cover = Cover(h, frozenset(args.indices))
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    covering = is_cover(cover)
    lines = [f"cover: {'yes' if covering else 'no'}"]
    payload: dict = {"selected": sorted(cover.selected), "is_cover": covering}
    if not covering:
        _emit(args, lines, "not-a-cover", payload, digest)
        return 1

    report = is_minimal_cover(cover)
    payload["minimal"] = report.minimal
    if report.minimal:
        payload["private_vertices"] = {str(i): v for i, v in report.private_vertex.items()}
        for i, v in sorted(report.private_vertex.items()):
            lines.append(f"private vertex of edge {i}: {h.label(v)}")
        lines.append("minimal: yes")
        _emit(args, lines, "minimal-cover", payload, digest)
        return 0
    payload["violating_edge"] = report.violating_edge
    lines.append(f"minimal: no (edge {report.violating_edge} is removable)")
    _emit(args, lines, "not-minimal", payload, digest)
    return 1


def cmd_minimalize(args) -> int:
    h, digest = _load(args.file)
    trace = None
    try:
        if args.algorithm == "greedy":
            result = greedy_minimalize(Cover(h, frozenset(range(len(h)))))
        elif args.algorithm == "point-finite":
            result = point_finite_cover(h)
        elif args.algorithm == "bounded-width":
            result = bounded_width_cover(h)
        else:
            result, trace = local_construction(h)
    except (NotACover, SizeLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    report = is_minimal_cover(result)
    lines = [f"selected: {' '.join(map(str, sorted(result.selected)))}"]
    for i, v in sorted(report.private_vertex.items()):
        lines.append(f"private vertex of edge {i}: {h.label(v)}")
    payload = {
        "algorithm": args.algorithm,
        "selected": sorted(result.selected),
        "private_vertices": {str(i): v for i, v in report.private_vertex.items()},
    }
    if trace is not None:
        payload["trace"] = _trace_payload(trace)
        for s in trace.steps:
            lines.append(
                f"step {s.step}: pivot {h.label(s.pivot)}, "
                f"local cover {sorted(s.local_cover)}, lifted {sorted(s.lifted)}"
            )
    _emit(args, lines, "minimal-cover", payload, digest)
    return 0


def cmd_gen(args) -> int:
    if args.name == "lines":
        if args.radius is None:
            print("error: gen lines requires --radius", file=sys.stderr)
            return 2
        try:
            lazy = gen_lattice_lines(args.radius)
        except SizeLimit as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        count = lazy.length
        header = f"lattice lines, radius {args.radius}"
    else:
        if args.count is None:
            print(f"error: gen {args.name} requires --count", file=sys.stderr)
            return 2
        count = args.count
        if args.name == "omega":
            lazy = gen_omega()
            header = f"initial segments, {count} edges"
        elif args.name == "domotor":
            lazy = gen_domotor()
            header = f"incomparable integer intervals, {count} edges"
        else:
            h = random_hypergraph(
                random.Random(args.seed),
                n_edges=count,
                max_vertex=args.max_vertex,
                max_width=args.max_width,
            )
            text = serialize_hypergraph(h, header=f"random, seed {args.seed}")
            return _emit_generated(args, text)

    h = truncate(lazy, count).hypergraph
    return _emit_generated(args, serialize_hypergraph(h, header=header))


def _emit_generated(args, text: str) -> int:
    if args.json:
        h = parse_hypergraph(text)
        payload = {"text": text, "edges": len(h), "vertices": len(h.vertices)}
        _emit(args, [], "generated", payload, None)
    else:
        sys.stdout.write(text)
    return 0


def cmd_find_omega(args) -> int:
    h, digest = _load(args.file)
    witness = find_omega_witness(h, args.depth)
    if witness is None:
        _emit(args, ["witness: none"], "no-witness", {"witness": None, "depth": args.depth}, digest)
        return 1
    if not validate_omega_witness(h, witness):
        raise AssertionError("search returned an invalid witness")
    lines = [
        f"witness vertices: {' '.join(h.label(v) for v in witness.omega)}",
        f"witness edges: {' '.join(map(str, witness.edge_indices))}",
    ]
    payload = {
        "witness": {
            "vertices": list(witness.omega),
            "vertex_labels": [h.label(v) for v in witness.omega],
            "edge_indices": list(witness.edge_indices),
            "depth": witness.depth,
        }
    }
    _emit(args, lines, "witness-found", payload, digest)
    return 0


def cmd_enumerate(args) -> int:
    h, digest = _load(args.file)
    try:
        covers = list(enumerate_minimal_covers(h, max_edges=args.max_edges))
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = [f"minimal cover: {' '.join(map(str, sorted(c.selected)))}" for c in covers]
    lines.append(f"count: {len(covers)}")
    payload = {"covers": [sorted(c.selected) for c in covers], "count": len(covers)}
    _emit(args, lines, "enumerated", payload, digest)
    return 0


def cmd_check_nm(args) -> int:
    h, digest = _load(args.file)
    try:
        report = check_nm(h, NmParams(args.n, args.m))
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if report.holds:
        _emit(args, [f"holds: every {args.n} edges meet in < {args.m} vertices"],
              "holds", {"holds": True}, digest)
        return 0
    payload = {
        "holds": False,
        "witness_indices": list(report.witness_indices),
        "intersection": sorted(report.intersection),
    }
    lines = [
        f"violated by edges {' '.join(map(str, report.witness_indices))}",
        f"their intersection: {' '.join(h.label(v) for v in sorted(report.intersection))}",
    ]
    _emit(args, lines, "violated", payload, digest)
    return 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercover",
        description="Minimal covers of finite hypergraphs: check, build, enumerate, probe.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized generators")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-cover", help="verify a selection is a (minimal) cover")
    p.add_argument("file", nargs="?", default="-", help="hypergraph file, - for stdin")
    p.add_argument("indices", type=_non_negative_int, nargs="*", help="selected edge indices")
    p.set_defaults(func=cmd_check_cover)

    p = sub.add_parser("minimalize", help="extract a minimal cover of the whole family")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument(
        "--algorithm",
        choices=["greedy", "point-finite", "bounded-width", "local"],
        default="greedy",
    )
    p.set_defaults(func=cmd_minimalize)

    p = sub.add_parser("gen", help="emit a built-in family as a hypergraph file")
    p.add_argument("name", choices=["omega", "domotor", "lines", "random"])
    p.add_argument("--count", type=_positive_int, help="number of edges to emit")
    p.add_argument("--radius", type=_positive_int, help="grid radius for lines")
    p.add_argument("--max-vertex", type=_positive_int, default=20, help="vertex pool for random")
    p.add_argument("--max-width", type=_positive_int, default=6, help="edge width cap for random")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("find-omega", help="search for a staircase witness")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--depth", type=_positive_int, required=True)
    p.set_defaults(func=cmd_find_omega)

    p = sub.add_parser("enumerate", help="list every minimal cover")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--max-edges", type=_positive_int, default=20)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check-nm", help="bounded pairwise-intersection check")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("-n", type=_positive_int, required=True, help="subfamily size")
    p.add_argument("-m", type=_positive_int, required=True, help="intersection bound")
    p.set_defaults(func=cmd_check_nm)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.command_echo = ["hypercover", *argv]
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
