"""Command-line front end for every engine capability.

Exit codes: 0 on success, 1 on domain outcomes like unreachable destinations
or disconnected terminals, 2 on usage errors and unparseable or invalid
inputs. All machine output is newline-terminated UTF-8 and deterministic for
fixed inputs.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path as FsPath

from .analysis import format_stats, path_stats, ring_lattice_with_shortcuts
from .dijkstra import DEFAULT_PATH_CAP, all_shortest_paths, extract_path, run_dijkstra
from .errors import (
    InvalidParams,
    ParseError,
    Unreachable,
    UnknownNode,
    ValidationError,
    WayfinderError,
)
from .graph import Graph, format_edge_list, parse_edge_list
from .mapkit import GridMap, format_grid, grid_to_graph, parse_city_map, parse_grid, city_to_graph
from .planner import metric_closure, solve_tsp_exact, solve_tsp_greedy
from .render import (
    format_dot,
    format_label_table,
    format_path,
    format_tour,
    label_table_json,
    path_json,
    spanning_tree_json,
    to_canonical_json,
    tour_json,
)

DEFAULT_PORT = 8000


def _read_text(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    """Edge-list files by default; .json files are treated as city maps."""
    text = _read_text(path)
    if path.endswith(".json"):
        return city_to_graph(parse_city_map(text))
    return parse_edge_list(text)


def _cmd_spt(args) -> int:
    g = _load_graph(args.graph)
    table, tree = run_dijkstra(g, args.origin)
    if args.format == "table":
        sys.stdout.write(format_label_table(table))
    elif args.format == "dot":
        sys.stdout.write(format_dot(g, tree))
    else:
        sys.stdout.write(to_canonical_json({"table": label_table_json(table), "tree": spanning_tree_json(tree)}))
    return 0


def _cmd_route(args) -> int:
    g = _load_graph(args.graph)
    if args.all:
        paths = all_shortest_paths(g, args.src, args.dst, cap=args.cap)
        if not paths:
            raise Unreachable(f"{args.dst!r} is not reachable from {args.src!r}")
    else:
        _, tree = run_dijkstra(g, args.src)
        paths = [extract_path(tree, args.dst)]
    if args.format == "json":
        payload = {"origin": args.src, "destination": args.dst, "paths": [path_json(p) for p in paths]}
        sys.stdout.write(to_canonical_json(payload))
    else:
        for p in paths:
            sys.stdout.write(format_path(p))
    return 0


def _cmd_tour(args) -> int:
    g = _load_graph(args.graph)
    terminals = set(g.nodes) if args.visit is None else {t for t in args.visit.split(",") if t}
    terminals.add(args.home)
    mc = metric_closure(g, terminals)
    tour = solve_tsp_greedy(mc, args.home) if args.greedy else solve_tsp_exact(mc, args.home)
    if args.format == "json":
        sys.stdout.write(to_canonical_json(tour_json(tour)))
    else:
        sys.stdout.write(format_tour(tour))
    return 0


def _resolve_grid_endpoint(gm: GridMap, g: Graph, token: str) -> str:
    if token in gm.markers:
        return gm.marker_node(token)
    if g.has_node(token):
        return token
    raise UnknownNode(f"{token!r} is neither a marker nor an open cell id")


def _cmd_grid_route(args) -> int:
    gm = parse_grid(_read_text(args.map))
    g = grid_to_graph(gm)
    src = _resolve_grid_endpoint(gm, g, args.src)
    dst = _resolve_grid_endpoint(gm, g, args.dst)
    _, tree = run_dijkstra(g, src)
    path = extract_path(tree, dst)
    cells = [tuple(int(part) for part in node.split(",")) for node in path.nodes()]
    if args.format == "json":
        payload = {
            "from": args.src,
            "to": args.dst,
            "total_cost": path.total_cost,
            "cells": [list(c) for c in cells],
        }
        sys.stdout.write(to_canonical_json(payload))
        return 0
    sys.stdout.write(format_path(path))
    overlay = {cell: "*" for cell in cells[1:-1] if cell not in {v for v in gm.markers.values()}}
    sys.stdout.write(format_grid(gm, overlay))
    return 0


def _cmd_stats(args) -> int:
    g = _load_graph(args.graph)
    stats = path_stats(g)
    if args.format == "json":
        sys.stdout.write(to_canonical_json(stats.to_json_dict()))
    else:
        sys.stdout.write(format_stats(stats))
    return 0


def _cmd_gen_lattice(args) -> int:
    g = ring_lattice_with_shortcuts(args.n, args.k, args.shortcuts, args.seed)
    sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    frontend = args.frontend
    if frontend is None and FsPath("frontend/dist").is_dir():
        frontend = "frontend/dist"
    serve(port=args.port, host=args.host, snapshot_path=args.snapshot, frontend_dir=frontend)
    return 0


def _add_format(parser: argparse.ArgumentParser, choices: tuple[str, ...], default: str) -> None:
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wayfinder", description="Shortest-path tools for weighted networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spt", help="label table and spanning tree from an origin")
    p.add_argument("--graph", required=True)
    p.add_argument("--origin", required=True)
    _add_format(p, ("table", "dot", "json"), "table")
    p.set_defaults(func=_cmd_spt)

    p = sub.add_parser("route", help="shortest path between two nodes")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--all", action="store_true", help="list every equal-cost shortest path")
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("tour", help="closed tour through chosen destinations")
    p.add_argument("--graph", required=True)
    p.add_argument("--home", required=True)
    p.add_argument("--visit", help="comma-separated destinations (default: every node)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true", default=False)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_tour)

    p = sub.add_parser("grid", help="grid-map commands")
    grid_sub = p.add_subparsers(dest="grid_command", required=True)
    q = grid_sub.add_parser("route", help="route between two markers on a grid map")
    q.add_argument("--map", required=True)
    q.add_argument("--from", dest="src", required=True)
    q.add_argument("--to", dest="dst", required=True)
    _add_format(q, ("text", "json"), "text")
    q.set_defaults(func=_cmd_grid_route)

    p = sub.add_parser("stats", help="path-length statistics over all node pairs")
    p.add_argument("--graph", required=True)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("gen", help="network generators")
    gen_sub = p.add_subparsers(dest="gen_command", required=True)
    q = gen_sub.add_parser("lattice", help="ring lattice plus seeded random shortcuts")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--shortcuts", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.set_defaults(func=_cmd_gen_lattice)

    p = sub.add_parser("serve", help="run the workbench HTTP API")
    p.add_argument("--port", type=int, default=int(os.environ.get("WAYFINDER_PORT", DEFAULT_PORT)))
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--snapshot", help="JSON file for loading/saving sessions across restarts")
    p.add_argument("--frontend", help="directory of built workbench UI assets to serve")
    p.set_defaults(func=_cmd_serve)

    return parser


# Errors that mean the request itself was bad, as opposed to a legitimate
# domain outcome (unreachable, disconnected, oversized instance).
_USAGE_ERRORS = (ParseError, ValidationError, UnknownNode, InvalidParams)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except WayfinderError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
