"""Command line entry point: construct | validate | classify-clique |
classify-c4 | color | helly-check | search | remarks | render.

Exit codes: 0 success, 1 domain failure (validation/coloring/helly verdict),
2 search exhausted, 3 search timeout, 64 usage error, 66 file error.
"""

from __future__ import annotations

import argparse
import sys

from . import classify, constructions, coloring, graphs, helly, intersect, search
from .lattice import PathFormatError, format_paths, parse_paths
from .render import render_svg

EX_OK = 0
EX_FAIL = 1
EX_EXHAUSTED = 2
EX_TIMEOUT = 3
EX_USAGE = 64
EX_NOINPUT = 66


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64 instead of argparse's 2
        raise _UsageError(message)


def _window(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError as exc:
        raise _UsageError(f"bad window {text!r}, expected WxH") from exc


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


def _load_rep(path: str, labeled: bool = False) -> intersect.Representation:
    entries = parse_paths(_read(path))
    paths = tuple(p for _, p in entries)
    if labeled:
        try:
            labels = tuple(int(i) for i, _ in entries)
        except ValueError as exc:
            raise _UsageError("labeled mode needs integer path ids") from exc
        return intersect.Representation(paths, labels)
    return intersect.Representation(paths)


def _build_parser() -> _Parser:
    top = _Parser(prog="epgt", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a built-in path family")
    p.add_argument("family", choices=["sun", "k2n", "claw", "gallery", "random"])
    p.add_argument("--k", type=int, help="sun parameter")
    p.add_argument("--n", type=int, help="K_{2,n} parameter")
    p.add_argument("--name", help="gallery subtype name")
    p.add_argument("--count", type=int, default=8, help="random family size")
    p.add_argument("--window", default="8x8", help="random family window WxH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", help="path file to write (default stdout)")
    p.add_argument("-g", "--graph-out", help="also write the target graph file")

    p = sub.add_parser("validate", help="check a representation against a graph")
    p.add_argument("--paths", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--max-bends", type=int, default=1)
    p.add_argument("--labeled", action="store_true")
    p.add_argument("--porcelain", action="store_true", help="key=value output")

    p = sub.add_parser("classify-clique", help="classify 3+ mutually intersecting paths")
    p.add_argument("--paths", required=True)

    p = sub.add_parser("classify-c4", help="classify 4 paths forming a chordless 4-cycle")
    p.add_argument("--paths", required=True)

    p = sub.add_parser("color", help="7-clique-color a family of paths")
    p.add_argument("--paths", required=True)
    p.add_argument("--explain", action="store_true")

    p = sub.add_parser("helly-check", help="search a window for Helly violations")
    p.add_argument("--window", default="4x4")
    p.add_argument("--max-seg", type=int, default=2)
    p.add_argument("--max-bends", type=int, default=1)
    p.add_argument("--strong", action="store_true", help="also report the strong variant")

    p = sub.add_parser("search", help="find a representation of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--max-bends", type=int, default=1)
    p.add_argument("--timeout", type=float)
    p.add_argument("-o", "--out", help="write the found paths here")

    p = sub.add_parser("remarks", help="exhaustive single-bend pair properties")
    p.add_argument("--window", default="4x4")

    p = sub.add_parser("render", help="draw a path family as SVG")
    p.add_argument("--paths", required=True)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--no-grid", action="store_true")

    return top


def _cmd_construct(args) -> int:
    if args.family == "sun":
        if args.k is None:
            raise _UsageError("construct sun needs --k")
        rep = constructions.sun_representation(args.k)
        target = graphs.sun(args.k)
    elif args.family == "k2n":
        if args.n is None:
            raise _UsageError("construct k2n needs --n")
        rep = constructions.k2n_representation(args.n)
        target = graphs.complete_bipartite(2, args.n)
    elif args.family == "claw":
        rep = constructions.claw_witness()
        target = graphs.complete_graph(3)
    elif args.family == "gallery":
        if not args.name:
            raise _UsageError("construct gallery needs --name")
        rep = constructions.gallery(args.name)
        target = None
    else:
        w, h = _window(args.window)
        rep = constructions.random_b1_family(args.count, w, h, args.seed)
        target = None
    ids = [str(l) for l in rep.labels] if rep.labels is not None else None
    text = format_paths(rep.paths, ids)
    if args.out:
        _write(args.out, text)
        print(f"wrote {len(rep.paths)} paths to {args.out}")
    else:
        sys.stdout.write(text)
    if args.graph_out:
        if target is None:
            raise _UsageError(f"no target graph for family {args.family!r}")
        _write(args.graph_out, graphs.format_graph(target))
        print(f"wrote target graph to {args.graph_out}")
    return EX_OK


def _cmd_validate(args) -> int:
    rep = _load_rep(args.paths, labeled=args.labeled)
    target = graphs.parse_graph(_read(args.graph))
    report = intersect.validate(rep, target, args.max_bends, labeled=args.labeled)
    print(report.as_keyvalues() if args.porcelain else report.as_text())
    return EX_OK if report.passed else EX_FAIL


def _cmd_classify_clique(args) -> int:
    rep = _load_rep(args.paths)
    if rep.n == 3:
        result = classify.classify_triangle(*rep.paths)
    else:
        result = classify.classify_maximal_clique(rep, range(rep.n))
    print(result.describe())
    return EX_OK


def _cmd_classify_c4(args) -> int:
    rep = _load_rep(args.paths)
    if rep.n != 4:
        raise _UsageError("classify-c4 needs exactly four paths in cyclic order")
    result = classify.classify_c4(*rep.paths)
    print(result.describe())
    return EX_OK


def _cmd_color(args) -> int:
    rep = _load_rep(args.paths)
    colored = coloring.clique_color(rep)
    for i, (triple, idx) in enumerate(zip(colored.triples, colored.indices)):
        print(f"P{i}: ({triple.horizontal},{triple.vertical},{triple.diagonal})"
              f" -> color {idx}")
    if args.explain:
        for ev in colored.events:
            print(
                f"recolored P{ev.path_index} at {ev.point}:"
                f" {tuple(ev.old)} -> {tuple(ev.new)}"
            )
    ok = coloring.verify_clique_coloring(rep, colored.indices)
    print(f"colors used: {colored.color_count} (<= 7)")
    print(f"verifier: {'PASS' if ok else 'FAIL'}")
    return EX_OK if ok else EX_FAIL


def _cmd_helly(args) -> int:
    w, h = _window(args.window)
    report = helly.helly_violation_search(
        w, h, max_seg_len=args.max_seg, max_bends=args.max_bends
    )
    print(report.as_text())
    bad = report.helly_witness is not None or (
        args.strong and report.strong_witness is not None
    )
    if report.helly_witness is not None:
        sys.stdout.write(format_paths(report.helly_witness))
    if args.strong and report.strong_witness is not None:
        sys.stdout.write(format_paths(report.strong_witness))
    return EX_FAIL if bad else EX_OK


def _cmd_search(args) -> int:
    target = graphs.parse_graph(_read(args.graph))
    w, h = _window(args.window)
    bounds = search.SearchBounds(w, h, max_bends=args.max_bends)
    result = search.find_representation(target, bounds, timeout=args.timeout)
    print(
        f"status: {result.status} ({result.nodes} nodes,"
        f" {result.paths_considered} candidate paths, {result.elapsed:.2f}s)"
    )
    if result.found:
        text = format_paths(
            result.representation.paths,
            [str(l) for l in result.representation.labels],
        )
        if args.out:
            _write(args.out, text)
        else:
            sys.stdout.write(text)
        return EX_OK
    return EX_TIMEOUT if result.status == "timeout" else EX_EXHAUSTED


def _cmd_remarks(args) -> int:
    w, h = _window(args.window)
    report = intersect.pair_property_suite(w, h)
    print(report.as_text())
    return EX_OK if report.passed else EX_FAIL


def _cmd_render(args) -> int:
    rep = _load_rep(args.paths)
    _write(args.out, render_svg(rep, grid=not args.no_grid))
    print(f"wrote {args.out}")
    return EX_OK


_HANDLERS = {
    "construct": _cmd_construct,
    "validate": _cmd_validate,
    "classify-clique": _cmd_classify_clique,
    "classify-c4": _cmd_classify_c4,
    "color": _cmd_color,
    "helly-check": _cmd_helly,
    "search": _cmd_search,
    "remarks": _cmd_remarks,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except (PathFormatError, graphs.GraphFormatError) as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
