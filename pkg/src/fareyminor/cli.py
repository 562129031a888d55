"""Command-line interface: ``fareyminor <command> ...``.

Exit codes: 0 success, 1 a check or validation failed, 2 bad input,
3 a path supply or size guard ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, farey
from . import grain_lines as gl
from .errors import FareyMinorError, InputError
from .formats import (
    emit_dot,
    emit_json,
    emit_prefix,
    emit_svg_circle,
    graph_to_doc,
    minor_map_to_doc,
    parse_json,
    parse_paths,
    parse_prefix,
    prefix_to_doc,
)
from .splitter import FareySupply, FlowSupply, foresighted_pipeline, split_step


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out=None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _print_json(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")


def cmd_gen(args) -> int:
    builders = {
        "halved": farey.build_halved_farey,
        "full": farey.build_farey,
        "determinant": lambda n: farey.build_determinant_graph(farey.build_halved_farey(n).labels.values()),
        "prop31": farey.build_prop31,
    }
    G = builders[args.kind](args.depth)
    if args.format == "json":
        text = emit_json(G, provenance=f"{args.kind} depth {args.depth}")
    elif args.format == "dot":
        text = emit_dot(G)
    else:
        text = emit_svg_circle(G, chords=args.chords)
    _write(text, args.out)
    return 0


def cmd_paths(args) -> int:
    G = farey.build_halved_farey(args.depth)
    _print_json([[str(lab) for lab in farey.labels_of(G, P)] for P in farey.blue_hamilton_paths(args.depth)])
    return 0


def cmd_grainline(args) -> int:
    if args.action == "extract":
        p = gl.extract(parse_paths(_read(args.paths)), args.target)
        _write(emit_prefix(p))
        return 0
    p = parse_prefix(_read(args.prefix))
    if args.action == "validate":
        report = gl.validate_prefix(p)
        _print_json(report.as_dict())
        return 0 if report.ok else 1
    q = gl.restrict(p, getattr(args, "from"), args.to)
    _write(emit_prefix(q))
    return 0


def _pick_supply(G, u, v, name):
    if name == "flow":
        return FlowSupply()
    if name == "farey" or all(isinstance(G.label(w), farey.Fraction) for w in (u, v)):
        return FareySupply()
    return FlowSupply()


def cmd_split(args) -> int:
    G = parse_json(_read(args.graph))
    sep = [int(s) for s in args.separator.split(",")] if args.separator else None
    res = split_step(G, args.u, args.v, _pick_supply(G, args.u, args.v, args.supply), args.k, separator=sep)
    audit = res.audit()
    _print_json(
        {
            "u": res.u,
            "v": res.v,
            "X": sorted(res.X),
            "x_vertex": res.x_vertex,
            "separator": sorted(res.separator),
            "anchors": {"s_u": res.s_u, "s_v": res.s_v, "x_u": res.x_u, "x_v": res.x_v},
            "P0": list(res.P0),
            "prefix_u": prefix_to_doc(res.prefix_u),
            "prefix_v": prefix_to_doc(res.prefix_v),
            "contracted_u": graph_to_doc(res.contracted_u),
            "contracted_v": graph_to_doc(res.contracted_v),
            "audit": audit,
            "note": "(iii) is checked through its finite surrogate: valid wildly presented sub-prefixes",
        }
    )
    return 0 if all(audit.values()) else 1


def cmd_foresight(args) -> int:
    G = farey.build_farey(args.host_depth)
    if args.subdivide:
        G = farey.subdivide(G)
    root = (G.vertex_by_label(farey.Fraction(0, 1)), G.vertex_by_label(farey.Fraction(1, 0)))
    res = foresighted_pipeline(G, root, FareySupply(), args.depth, args.k)
    _print_json(
        {
            "stages": [
                {"level": n, "vertices": len(S), "edges": S.number_of_edges()} for n, S in enumerate(res.stages)
            ],
            "new_vertices": {
                str(z): {"level": lvl, "parent_edge": list(e)} for z, (lvl, e) in sorted(res.provenance.items())
            },
            "final": minor_map_to_doc(res.final),
        }
    )
    return 0


def cmd_check(args) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        for verdict in checks.SUITES[name]():
            status = "PASS" if verdict.ok else "FAIL"
            detail = f" ({verdict.detail})" if verdict.detail else ""
            print(f"{status} [{name}] {verdict.name}{detail}")
            failed += not verdict.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fareyminor", description="Farey graph minors on finite truncations.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a graph")
    g.add_argument("--kind", choices=["halved", "full", "determinant", "prop31"], required=True)
    g.add_argument("--depth", type=int, required=True)
    g.add_argument("--out")
    g.add_argument("--format", choices=["json", "dot", "svg"], default="json")
    g.add_argument("--chords", action="store_true", help="straight chords instead of arcs in SVG")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("paths", help="blue Hamilton paths as label sequences")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    gl_parser = sub.add_parser("grainline", help="grain-line prefixes")
    gl_sub = gl_parser.add_subparsers(dest="action", required=True)
    ex = gl_sub.add_parser("extract")
    ex.add_argument("--paths", required=True)
    ex.add_argument("--target", type=int, required=True)
    va = gl_sub.add_parser("validate")
    va.add_argument("--prefix", required=True)
    re_ = gl_sub.add_parser("restrict")
    re_.add_argument("--prefix", required=True)
    re_.add_argument("--from", type=int, required=True)
    re_.add_argument("--to", type=int, required=True)
    gl_parser.set_defaults(func=cmd_grainline)

    s = sub.add_parser("split", help="one split step between two vertices")
    s.add_argument("--graph", required=True)
    s.add_argument("--u", type=int, required=True)
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--separator", help="comma-separated vertex ids")
    s.add_argument("--supply", choices=["auto", "farey", "flow"], default="auto")
    s.set_defaults(func=cmd_split)

    f = sub.add_parser("foresight", help="grow a halved Farey minor inside a Farey truncation")
    f.add_argument("--depth", type=int, required=True)
    f.add_argument("--host-depth", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--subdivide", action="store_true", help="subdivide every host edge once")
    f.set_defaults(func=cmd_foresight)

    c = sub.add_parser("check", help="run a self-check suite")
    c.add_argument("--suite", choices=[*checks.SUITES, "all"], required=True)
    c.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FareyMinorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
