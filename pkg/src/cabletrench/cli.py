"""Command-line interface: ``cabletrench solve|strength|decompose|export|gen|count``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path

from . import generators
from .cactus import NotACactus, decompose_cactus, is_cactus, cactus_ctp
from .cycle import is_cycle, cycle_ctp
from .graph import GraphError, RootedGraph, SpanningTree, tree_cost
from .instance import InstanceError, format_instance, read_instance
from .milp import build_milp, write_lp
from .oracle import DEFAULT_CAP, CapExceeded, SolveResult, brute_force_ctp, greedy_heuristic, spanning_tree_count
from .strength import vertex_strength
from .theta import as_theta, is_theta, theta_ctp

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_UNSUPPORTED = 5

METHODS = ("auto", "tree", "brute", "cycle", "theta", "cactus", "heuristic")


class Unsupported(Exception):
    pass


def detect_class(g: RootedGraph) -> str:
    if g.edge_count == g.vertex_count - 1:
        return "tree"
    if is_cycle(g):
        return "cycle"
    if is_theta(g):
        return "theta"
    if is_cactus(g):
        return "cactus"
    return "general"


def _tree_result(g: RootedGraph) -> SolveResult:
    tree = SpanningTree(g, frozenset(range(g.edge_count)))
    return SolveResult(tree, tree_cost(g, tree), 1, "tree")


def solve_instance(
    g: RootedGraph, method: str = "auto", cap: int = DEFAULT_CAP, allow_heuristic: bool = False
) -> tuple[SolveResult, str | None]:
    """Run the requested solver; returns the result and an optional warning."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    warning = None
    if method == "auto":
        kind = detect_class(g)
        if kind == "general":
            try:
                return brute_force_ctp(g, cap), None
            except CapExceeded:
                if not allow_heuristic:
                    raise
            method = "heuristic"
        else:
            method = kind
    if method == "tree":
        if g.edge_count != g.vertex_count - 1:
            raise Unsupported("instance is not a tree")
        result = _tree_result(g)
    elif method == "brute":
        result = brute_force_ctp(g, cap)
    elif method == "cycle":
        if not is_cycle(g):
            raise Unsupported("instance is not a cycle")
        result = cycle_ctp(g)
    elif method == "theta":
        if not is_theta(g):
            raise Unsupported("instance is not a theta graph rooted at a branch vertex")
        result = theta_ctp(as_theta(g))
    elif method == "cactus":
        if not is_cactus(g):
            raise Unsupported("instance is not a cactus")
        result = cactus_ctp(g)
    else:
        result = greedy_heuristic(g)
        warning = "heuristic result: not guaranteed optimal"
    return result, warning


def fmt_exact(q: Fraction) -> str:
    return str(q)


def fmt_decimal(q: Fraction) -> str:
    ctx = Context(prec=12)
    d = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    return format(d.normalize(ctx), "f")


def _num(q: Fraction) -> dict:
    return {"exact": fmt_exact(q), "decimal": fmt_decimal(q)}


def solve_report(g: RootedGraph, result: SolveResult, warning: str | None = None, seconds: float | None = None) -> dict:
    """Serializable report; totals are recomputed from the tree, never trusted."""
    cost = tree_cost(g, result.tree)
    if cost != result.cost:
        raise RuntimeError(f"solver {result.method} reported {result.cost}, tree evaluates to {cost}")
    report = {
        "schema": SCHEMA,
        "method": result.method,
        "root": g.root,
        "tree_edges": sorted(result.tree.edges),
        "deleted_edges": sorted(result.deleted),
        "trench": _num(cost.trench),
        "cable": _num(cost.cable),
        "total": _num(cost.total),
        "optimal_count": result.optimal_count,
    }
    if warning:
        report["warning"] = warning
    if seconds is not None:
        report["seconds"] = round(seconds, 6)
    return report


def strength_report(g: RootedGraph, vertex: int) -> dict:
    if not is_cycle(g):
        raise Unsupported("strength is only defined for cycle instances")
    return {"schema": SCHEMA, **vertex_strength(g, vertex).to_dict()}


def decomposition_report(g: RootedGraph) -> dict:
    try:
        d = decompose_cactus(g)
    except NotACactus as exc:
        raise Unsupported(str(exc)) from None
    return {
        "schema": SCHEMA,
        "root": g.root,
        "blocks": [
            {"kind": b.kind, "entry": b.entry, "vertices": list(b.vertices), "edges": list(b.edges)}
            for b in d.blocks
        ],
        "hang": list(d.hang),
    }


def to_dot(g: RootedGraph, tree: SpanningTree | None = None) -> str:
    lines = ["graph ctp {"]
    for x in range(g.vertex_count):
        shape = "doublecircle" if x == g.root else "circle"
        lines.append(f"  {x} [shape={shape}];")
    for eid, e in enumerate(g.edges):
        attrs = f'label="e{eid} g={e.gamma} t={e.tau}"'
        if tree is not None:
            attrs += ", color=red, penwidth=2" if eid in tree.edges else ", style=dashed"
        lines.append(f"  {e.u} -- {e.v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_solve(args) -> int:
    g = read_instance(args.file)
    start = time.perf_counter()
    result, warning = solve_instance(g, args.method, args.cap, args.heuristic)
    report = solve_report(g, result, warning, time.perf_counter() - start)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        _emit(_dump(report), args.output)
    else:
        text = (
            f"method: {report['method']}\n"
            f"tree edges: {' '.join(map(str, report['tree_edges']))}\n"
            f"trench: {report['trench']['exact']} ({report['trench']['decimal']})\n"
            f"cable: {report['cable']['exact']} ({report['cable']['decimal']})\n"
            f"total: {report['total']['exact']} ({report['total']['decimal']})\n"
            f"optimal trees: {report['optimal_count'] if report['optimal_count'] is not None else 'n/a'}\n"
        )
        _emit(text, args.output)
    return EXIT_OK


def _cmd_strength(args) -> int:
    g = read_instance(args.file)
    _emit(_dump(strength_report(g, args.vertex)), args.output)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    g = read_instance(args.file)
    _emit(_dump(decomposition_report(g)), args.output)
    return EXIT_OK


def _cmd_export(args) -> int:
    g = read_instance(args.file)
    if args.target == "lp":
        _emit(write_lp(build_milp(g)), args.output)
    else:
        tree = None
        if args.solve:
            tree = solve_instance(g, "auto", args.cap, args.heuristic)[0].tree
        _emit(to_dot(g, tree), args.output)
    return EXIT_OK


def _cmd_gen(args) -> int:
    params: dict = {}
    if args.kind in ("cycle", "cactus", "tree", "chain"):
        if args.n is None:
            raise SystemExit(f"gen {args.kind} needs --n")
        params["n"] = args.n
    elif args.kind == "theta":
        if not args.paths:
            raise SystemExit("gen theta needs --paths A B C")
        params.update(a=args.paths[0], b=args.paths[1], c=args.paths[2])
    elif args.kind == "grid":
        if args.cols is None:
            raise SystemExit("gen grid needs --cols")
        params.update(rows=args.rows, cols=args.cols)
    if args.weights:
        params["weights"] = args.weights
    g = generators.generate(args.kind, seed=args.seed, **params)
    _emit(format_instance(g), args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    g = read_instance(args.file)
    _emit(f"{spanning_tree_count(g)}\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cabletrench", description="Exact cable-trench solver")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, cap=False):
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum spanning trees to enumerate")
            p.add_argument("--heuristic", action="store_true", help="fall back to the greedy heuristic above the cap")

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    common(p, cap=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("strength", help="strength indices of a cycle at a vertex")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    common(p)
    p.set_defaults(func=_cmd_strength)

    p = sub.add_parser("decompose", help="block decomposition of a cactus")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("export", help="write the MILP (lp) or a Graphviz drawing (dot)")
    p.add_argument("file")
    p.add_argument("target", choices=("lp", "dot"))
    p.add_argument("--solve", action="store_true", help="highlight the optimal tree in DOT output")
    common(p, cap=True)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=generators.KINDS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, help="vertex count (cycle, cactus, tree, chain)")
    p.add_argument("--paths", type=int, nargs=3, metavar=("A", "B", "C"), help="theta path lengths")
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--cols", type=int)
    p.add_argument("--weights", choices=("random", "unit"))
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("count", help="number of spanning trees")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_count)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}; rerun with --heuristic for an approximate answer or raise --cap", file=sys.stderr)
        return EXIT_CAP
    except Unsupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
