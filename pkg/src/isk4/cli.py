"""Command-line interface.

Every subcommand reads graphs from a file or stdin (``-``), in graph6 (one
graph per line) or edge-list format, and writes either JSON or short text.
The JSON document starts with a header holding the tool version and every
effective setting, so a run can be repeated from its own output.

Exit codes: 0 success (colored, in the class, nothing found), 1 a valid
negative answer that comes with a witness, 2 usage or input errors, 3 an
exhausted search budget or a truncated enumeration.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Callable

from . import __version__
from .coloring import INCONCLUSIVE as COLOR_INCONCLUSIVE
from .coloring import REFUSED, three_color, verify_coloring
from .decompose import INCONCLUSIVE_STEP, NOT_IN_CLASS, decomposition_step, decomposition_tree
from .formats import FormatError, emit_graph6, read_graphs, write_graph6_lines
from .graph import Graph, GraphError
from .harness.corpus import CorpusError, parse_corpus
from .harness.runner import UnknownSuite, run_suite
from .harness.suites import SUITES
from .recognizers import (
    DEFAULT_EXACT_BOUND,
    INCONCLUSIVE,
    OUT_OF_CLASS,
    class_membership,
    find_isk4,
    find_k33_subgraph,
    find_linkage,
    find_triangle,
    is_series_parallel,
)
from .search import DEFAULT_BUDGET, Budget, SearchBudgetExceeded
from .sparse_cycles import INCONCLUSIVE as CYCLE_INCONCLUSIVE
from .sparse_cycles import NO_CERTIFICATE, apex_forest_cycle, far_cycle_sp, sparse_cycle
from .wheels import (
    DEFAULT_HOLE_CAP,
    enumerate_holes,
    find_wheel,
    min_spoke_proper_wheel,
    proper_wheel_centers,
    proper_wheel_search,
    verify_wheelmain,
)

__all__ = ["main", "build_parser"]

OK, NEGATIVE, USAGE, UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _budget_arg(text: str) -> int | None:
    if text.lower() in ("none", "unlimited"):
        return None
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("g6", "edgelist"), default="g6", help="input format (default g6)")
    common.add_argument("--exact-bound", type=int, default=DEFAULT_EXACT_BOUND,
                        help=f"largest order decided by subset enumeration (default {DEFAULT_EXACT_BOUND})")
    common.add_argument("--budget", type=_budget_arg, default=DEFAULT_BUDGET,
                        help=f"search step budget per graph, or 'none' (default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, default=None, help="seed for generated corpora")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--progress", action="store_true", help="report progress on stderr")

    with_input = argparse.ArgumentParser(add_help=False)
    with_input.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")

    parser = argparse.ArgumentParser(prog="isk4", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"isk4 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("color", parents=[common, with_input], help="certified 3-coloring")

    p = sub.add_parser("detect", parents=[common, with_input], help="look for a forbidden structure")
    p.add_argument("--what", choices=("class", "triangle", "isk4", "k33", "sp", "linkage"), default="class")
    p.add_argument("--vertex", type=int, help="vertex for --what linkage")
    p.add_argument("--hole", help="comma-separated hole for --what linkage")

    p = sub.add_parser("decompose", parents=[common, with_input], help="one decomposition step")
    p.add_argument("--tree", action="store_true", help="apply steps recursively")

    p = sub.add_parser("wheels", parents=[common, with_input], help="find proper wheels")
    p.add_argument("--hole-cap", type=int, default=DEFAULT_HOLE_CAP, help="maximum number of holes to enumerate")
    p.add_argument("--verify", action="store_true", help="check every proper-wheel center's fewest-spoke wheel")

    p = sub.add_parser("sparse-cycle", parents=[common, with_input], help="cycle with few high-degree vertices")
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-y", type=int, required=True)
    p.add_argument("--mode", choices=("general", "forest", "sp"), default="general",
                   help="general search, graph minus x a forest, or series-parallel")

    p = sub.add_parser("gen", parents=[common], help="emit a corpus as graph6")
    p.add_argument("corpus", help="corpus, e.g. gen:sp:10:1 or internal:5@connected")

    p = sub.add_parser("verify", parents=[common], help="run a theorem suite over a corpus")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--corpus", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    return parser


def _header(args: argparse.Namespace, extra: dict | None = None) -> dict:
    settings = {
        "format": args.format,
        "exact_bound": args.exact_bound,
        "budget": args.budget,
        "seed": args.seed,
    }
    settings.update(extra or {})
    return {"tool": "isk4", "version": __version__, "command": args.command, "settings": settings}


def _emit(doc: dict, text_lines: list[str], args: argparse.Namespace) -> None:
    if args.output == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _worst(codes) -> int:
    codes = list(codes)
    if UNDECIDED in codes:
        return UNDECIDED
    if NEGATIVE in codes:
        return NEGATIVE
    return OK


def _per_graph(args, graphs: list[Graph], handler: Callable[[Graph], tuple[int, dict, str]], extra=None) -> int:
    results, lines, codes = [], [], []
    for i, g in enumerate(graphs):
        code, body, line = handler(g)
        codes.append(code)
        results.append({"index": i, "graph6": emit_graph6(g), **body})
        lines.append(f"{i}\t{line}")
        if args.progress:
            print(f"{i + 1}/{len(graphs)}", file=sys.stderr)
    doc = _header(args, extra)
    doc["results"] = results
    _emit(doc, lines, args)
    return _worst(codes)


# subcommands ----------------------------------------------------------------


def _color(args, graphs) -> int:
    def handle(g):
        res = three_color(g, args.exact_bound, Budget(args.budget))
        body = res.to_dict()
        if res.status == REFUSED:
            return NEGATIVE, body, f"refused {res.witness.to_dict()['kind']} {list(res.witness.vertices)}"
        if res.status == COLOR_INCONCLUSIVE:
            return UNDECIDED, body, "inconclusive"
        body["verified"] = verify_coloring(g, res.coloring)
        return OK, body, f"colored with {res.colors_used} colors: {' '.join(map(str, res.coloring))}"

    return _per_graph(args, graphs, handle)


def _parse_hole(text: str | None) -> list[int]:
    if not text:
        raise UsageError("--what linkage needs --vertex and --hole")
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad hole {text!r}") from None


def _detect(args, graphs) -> int:
    what = args.what
    if what == "linkage":
        hole = _parse_hole(args.hole)
        if args.vertex is None:
            raise UsageError("--what linkage needs --vertex and --hole")

    def found(w, name):
        if w is None:
            return OK, {"found": False}, f"no {name}"
        return NEGATIVE, {"found": True, "witness": w.to_dict()}, f"{name}: {w.to_dict()}"

    def handle(g):
        if what == "class":
            report = class_membership(g, args.exact_bound, Budget(args.budget))
            code = {OUT_OF_CLASS: NEGATIVE, INCONCLUSIVE: UNDECIDED}.get(report.verdict, OK)
            return code, report.to_dict(), report.verdict
        if what == "triangle":
            return found(find_triangle(g), "triangle")
        if what == "k33":
            return found(find_k33_subgraph(g), "K3,3")
        if what == "isk4":
            try:
                w = find_isk4(g, args.exact_bound, Budget(args.budget))
            except SearchBudgetExceeded:
                return UNDECIDED, {"found": None}, "inconclusive"
            return found(w, "ISK4")
        if what == "sp":
            report = is_series_parallel(g)
            return (OK if report else NEGATIVE), report.to_dict(), (
                "series-parallel" if report else f"K4 minor {report.minor.to_dict()['branch_sets']}")
        try:
            w = find_linkage(g, args.vertex, hole, Budget(args.budget))
        except SearchBudgetExceeded:
            return UNDECIDED, {"found": None}, "inconclusive"
        return found(w, "linkage")

    return _per_graph(args, graphs, handle, {"what": what})


def _decompose(args, graphs) -> int:
    def handle(g):
        if args.tree:
            tree = decomposition_tree(g, args.exact_bound, Budget(args.budget))
            kinds = _tree_kinds(tree)
            code = UNDECIDED if INCONCLUSIVE_STEP in kinds else NEGATIVE if NOT_IN_CLASS in kinds else OK
            return code, {"tree": tree}, f"tree with {len(kinds)} nodes, root {tree['kind']}"
        step = decomposition_step(g, args.exact_bound, Budget(args.budget))
        code = {NOT_IN_CLASS: NEGATIVE, INCONCLUSIVE_STEP: UNDECIDED}.get(step.kind, OK)
        return code, {"step": step.to_dict()}, f"{step.kind} {json.dumps(step.to_dict(), sort_keys=True)}"

    return _per_graph(args, graphs, handle, {"tree": args.tree})


def _tree_kinds(node: dict) -> list[str]:
    out = [node["kind"]]
    for child in node.get("children", ()):
        out += _tree_kinds(child)
    return out


def _wheels(args, graphs) -> int:
    def handle(g):
        budget = Budget(args.budget)
        holes, overflow = enumerate_holes(g, args.hole_cap, budget)
        first = find_wheel(g, holes)
        search = proper_wheel_search(g, holes)
        centers = proper_wheel_centers(g, holes)
        body = {
            "holes": len(holes),
            "holes_truncated": overflow,
            "min_rim_wheel": None if first is None else first.to_dict(),
            "proper": search.to_dict(),
            "proper_centers": centers,
        }
        if args.verify:
            checks = []
            for c in centers:
                w = min_spoke_proper_wheel(g, c, holes)
                report = verify_wheelmain(g, w, holes)
                checks.append({"center": c, "wheel": w.to_dict(), "ok": report.ok, "failures": report.failures})
            body["wheelmain"] = checks
        if overflow:
            return UNDECIDED, body, f"hole enumeration truncated at {len(holes)}"
        if search.wheel is None:
            line = "wheel-free" if search.wheel_free else "only improper wheels"
        else:
            line = f"proper wheel center {search.wheel.center} rim {list(search.wheel.rim)}"
        if args.verify and not all(c["ok"] for c in body["wheelmain"]):
            return NEGATIVE, body, line + " (wheelmain check failed)"
        return OK, body, line

    return _per_graph(args, graphs, handle, {"hole_cap": args.hole_cap, "verify": args.verify})


def _sparse_cycle(args, graphs) -> int:
    def handle(g):
        budget = Budget(args.budget)
        if args.mode == "forest":
            out = apex_forest_cycle(g, args.x, budget)
        elif args.mode == "sp":
            out = far_cycle_sp(g, args.x, args.y, budget)
        else:
            out = sparse_cycle(g, args.x, args.y, budget)
        code = {NO_CERTIFICATE: NEGATIVE, CYCLE_INCONCLUSIVE: UNDECIDED}.get(out.kind, OK)
        return code, {"outcome": out.to_dict()}, f"{out.kind} {json.dumps(out.to_dict(), sort_keys=True)}"

    return _per_graph(args, graphs, handle, {"x": args.x, "y": args.y, "mode": args.mode})


def _corpus(args, text: str):
    spec = parse_corpus(text)
    if args.seed is not None and spec.source == "gen":
        spec = dataclasses.replace(spec, seed=args.seed)
    return spec


def _gen(args) -> int:
    spec = _corpus(args, args.corpus)
    graphs = list(spec.graphs())
    if args.output == "text":
        sys.stdout.write(write_graph6_lines(graphs))
        return OK
    doc = _header(args, {"corpus": args.corpus, "effective_seed": spec.seed if spec.source == "gen" else None})
    doc["graphs"] = [emit_graph6(g) for g in graphs]
    _emit(doc, [], args)
    return OK


def _report_progress(i: int) -> None:
    print(f"{i} instances", file=sys.stderr)


def _verify(args) -> int:
    spec = _corpus(args, args.corpus)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    progress = _report_progress if args.progress else None
    report = run_suite(args.suite, spec, args.exact_bound, args.budget, args.jobs, progress)
    if args.output == "json":
        doc = _header(args, {"suite": args.suite, "corpus": args.corpus,
                             "effective_seed": spec.seed if spec.source == "gen" else None})
        doc["report"] = report.to_dict(args.timing)
        _emit(doc, [], args)
    else:
        print(report.summary())
    if report.failed:
        return NEGATIVE
    if report.inconclusive:
        return UNDECIDED
    return OK


HANDLERS = {
    "color": _color,
    "detect": _detect,
    "decompose": _decompose,
    "wheels": _wheels,
    "sparse-cycle": _sparse_cycle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        if args.command == "gen":
            return _gen(args)
        if args.command == "verify":
            return _verify(args)
        graphs = read_graphs(args.input, args.format)
        return HANDLERS[args.command](args, graphs)
    except (FormatError, GraphError, CorpusError, UnknownSuite, UsageError, OSError) as e:
        print(f"isk4 {args.command}: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
