"""Command-line front end.

Exit status convention: 0 success/pass, 1 verified-negative (invalid plan,
not-path-pairable, internal routing failure), 2 usage or parse errors,
3 cap-hit/inconclusive.
"""
from __future__ import annotations

import argparse
import sys
from typing import Any

from . import blowup, formats, pairability, routing, verify
from .graph import (FamilySpec, Graph, GraphError, diameter, generate)

_FAMILY_PARAMS = {
    "cycle": ("k",),
    "complete": ("k",),
    "complete-bipartite": ("a", "b"),
    "hypercube": ("dim",),
    "petersen": (),
    "grid2": ("a", "b"),
    "grid3": ("a", "b", "c"),
    "blown-cycle": ("m",),
}


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", choices=sorted(_FAMILY_PARAMS))
    sub.add_argument("--graph", metavar="FILE", help="read the graph from FILE")
    sub.add_argument("--format", choices=formats.GRAPH_FORMATS, default="json",
                     help="graph file format (default json)")
    for name in ("k", "a", "b", "c", "dim", "m"):
        sub.add_argument(f"--{name}", type=int)


def _resolve_graph(args) -> tuple[Graph, dict[str, Any]]:
    """Build or load the graph named by --family/--graph; returns annotations
    (the blown-cycle block when applicable) alongside."""
    if (args.family is None) == (args.graph is None):
        raise GraphError("exactly one of --family or --graph is required")
    if args.graph is not None:
        with open(args.graph) as fh:
            return formats.loads_graph(fh.read(), args.format)
    wanted = _FAMILY_PARAMS[args.family]
    params = []
    for name in wanted:
        value = getattr(args, name)
        if value is None:
            raise GraphError(f"family {args.family} needs --{name}")
        params.append(value)
    for name in ("k", "a", "b", "c", "dim", "m"):
        if getattr(args, name) is not None and name not in wanted:
            raise GraphError(f"family {args.family} does not take --{name}")
    if args.family == "blown-cycle":
        b = blowup.build(params[0])
        return b.graph, {"blown_cycle": {"m": b.m, "q": b.q}}
    return generate(FamilySpec(family=args.family, params=tuple(params))), {}


def _resolve_blown(args) -> blowup.BlownCycle:
    """Blown cycle for route: either --m or an annotated graph file."""
    if args.m is not None and args.graph is None:
        return blowup.build(args.m)
    if args.graph is None:
        raise GraphError("route needs --m or an annotated --graph file")
    with open(args.graph) as fh:
        g, annotations = formats.loads_graph(fh.read(), args.format)
    block = annotations.get("blown_cycle")
    if not isinstance(block, dict) or "m" not in block:
        raise formats.FormatError(
            "graph file carries no blown-cycle annotation; route only works "
            "on the blown-cycle construction")
    b = blowup.build(int(block["m"]))
    if g != b.graph:
        raise formats.FormatError(
            "graph file does not match the construction its annotation claims")
    return b


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _cmd_generate(args) -> int:
    g, annotations = _resolve_graph(args)
    _emit(formats.dumps_graph(g, args.format, annotations or None), args.output)
    return 0


def _cmd_route(args) -> int:
    b = _resolve_blown(args)
    extras: dict[str, Any] = {"m": b.m}
    if (args.pairing is None) == (args.random is None):
        raise GraphError("route needs exactly one of --pairing or --random")
    if args.random is not None:
        pairing = routing.random_perfect_pairing(b.n, args.random)
        extras["seed"] = args.random
    else:
        with open(args.pairing) as fh:
            pairing = formats.loads_pairing(fh.read())
    plan = routing.route(b, pairing)
    _emit(formats.dumps_plan(plan, extras), args.output)
    print(f"n {b.n}\ndiameter {diameter(b.graph)}\n"
          f"max_route_length {plan.max_route_length}\n"
          f"edges_used {plan.edges_used}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.plan == "-":
        text = sys.stdin.read()
    else:
        with open(args.plan) as fh:
            text = fh.read()
    plan, extras = formats.loads_plan(text)
    if args.graph is not None:
        with open(args.graph) as fh:
            g, _ = formats.loads_graph(fh.read(), args.format)
    elif isinstance(extras.get("m"), int):
        g = blowup.build(extras["m"]).graph
    else:
        raise formats.FormatError(
            "verify needs --graph or a plan with an \"m\" annotation")
    if args.pairing is not None:
        with open(args.pairing) as fh:
            pairing = formats.loads_pairing(fh.read())
    else:
        pairing = routing.make_pairing((r.x, r.y) for r in plan.routes)
    report = verify.verify_plan(g, pairing, plan)
    sys.stdout.write(report.to_json())
    return 0 if report.ok else 1


def _cmd_decide(args) -> int:
    g, _ = _resolve_graph(args)
    verdict = pairability.is_path_pairable(g, budget=args.budget,
                                           workers=args.workers)
    sys.stdout.write(verdict.to_json())
    if verdict.status == pairability.PATH_PAIRABLE:
        return 0
    if verdict.status == pairability.NOT_PATH_PAIRABLE:
        return 1
    return 3


def _cmd_screen(args) -> int:
    g, _ = _resolve_graph(args)
    report = pairability.screen(g)
    sys.stdout.write(report.to_json())
    return 0 if report.verdict == pairability.CANNOT_RULE_OUT else 1


def _cmd_stats(args) -> int:
    g, _ = _resolve_graph(args)
    d = diameter(g)
    ratio = d / pairability.diameter_upper_bound(g.n) if g.n else 0.0
    print(f"n {g.n}")
    print(f"edges {g.edge_count}")
    print(f"max_degree {g.max_degree}")
    print(f"diameter {d}")
    print(f"diameter_bound_ratio {ratio:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairpath",
        description="Construct, route, verify, decide, and screen "
                    "path-pairable graphs.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("generate", help="emit a named graph family")
    _add_graph_source(p)
    p.add_argument("--output", "-o", metavar="FILE")
    p.set_defaults(func=_cmd_generate)

    p = subs.add_parser("route", help="route a pairing through a blown cycle")
    _add_graph_source(p)
    p.add_argument("--pairing", metavar="FILE")
    p.add_argument("--random", type=int, metavar="SEED",
                   help="route a seeded uniform random perfect pairing")
    p.add_argument("--output", "-o", metavar="FILE")
    p.set_defaults(func=_cmd_route)

    p = subs.add_parser("verify", help="re-check a route plan")
    p.add_argument("--plan", metavar="FILE", default="-",
                   help="plan JSON (default: stdin)")
    p.add_argument("--graph", metavar="FILE")
    p.add_argument("--format", choices=formats.GRAPH_FORMATS, default="json")
    p.add_argument("--pairing", metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("decide", help="exhaustive path-pairability decision")
    _add_graph_source(p)
    p.add_argument("--budget", type=int, default=pairability.DEFAULT_NODE_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_decide)

    p = subs.add_parser("screen", help="necessary-condition screening")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_screen)

    p = subs.add_parser("stats", help="basic metrics and the diameter ratio")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except routing.RoutingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
