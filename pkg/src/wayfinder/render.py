"""Output renderers shared by the CLI and the HTTP API.

Text renderings are for humans; the JSON shapes are documented, stable, and
canonical (sorted keys, two-space indent, trailing newline), so re-serializing
parsed output reproduces it byte for byte.
"""

from __future__ import annotations

import json

from .dijkstra import LabelTable, SpanningTree
from .graph import Graph, Path, format_cost
from .planner import Tour

BLANK = "-"


def to_canonical_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _fmt_dist(value: float | None) -> str:
    return BLANK if value is None else format_cost(value)


def format_label_table(table: LabelTable) -> str:
    """Aligned text table with one node/dist/last/shaded row per node."""
    rows = [("node", "dist", "last", "shaded")]
    for node, label in sorted(table.labels.items()):
        rows.append(
            (node, _fmt_dist(label.dist), label.last or BLANK, "yes" if label.shaded else "no")
        )
    widths = [max(len(row[col]) for row in rows) for col in range(4)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def label_table_json(table: LabelTable) -> dict:
    return {
        "origin": table.origin,
        "labels": {
            n: {"dist": lb.dist, "last": lb.last, "shaded": lb.shaded}
            for n, lb in sorted(table.labels.items())
        },
    }


def spanning_tree_json(tree: SpanningTree) -> dict:
    return {
        "origin": tree.origin,
        "parent": dict(sorted(tree.parent.items())),
        "dist": dict(sorted(tree.dist.items())),
    }


def format_dot(g: Graph, tree: SpanningTree | None = None) -> str:
    """DOT drawing of the network; tree edges carry style=bold as the marker.

    Layout is left to the renderer. Only the edge set and the bold marking of
    tree edges are meaningful.
    """
    connector = "->" if g.directed else "--"
    kind = "digraph" if g.directed else "graph"
    tree_pairs = set()
    if tree is not None:
        for child, parent in tree.parent.items():
            tree_pairs.add((parent, child))
            if not g.directed:
                tree_pairs.add((child, parent))
    lines = [f"{kind} network {{"]
    for node in g.nodes:
        if tree is not None and node in tree.dist:
            lines.append(f'  "{node}" [label="{node} ({format_cost(tree.dist[node])})"];')
        else:
            lines.append(f'  "{node}";')
    for e in g.edges:
        attrs = [f'label="{format_cost(e.cost)}"']
        if e.name is not None:
            attrs.append(f'tooltip="{e.name}"')
        if (e.src, e.dst) in tree_pairs:
            attrs.append("style=bold")
        lines.append(f'  "{e.src}" {connector} "{e.dst}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_path(p: Path) -> str:
    return f"cost {format_cost(p.total_cost)}: {' '.join(p.nodes())}\n"


def path_json(p: Path) -> dict:
    return {
        "origin": p.origin,
        "destination": p.destination,
        "nodes": list(p.nodes()),
        "edges": [
            {"from": e.src, "to": e.dst, "cost": e.cost, "name": e.name} for e in p.edges
        ],
        "total_cost": p.total_cost,
    }


def format_tour(tour: Tour) -> str:
    lines = [
        f"stops: {' '.join(tour.stops)}",
        f"walk: {' '.join(tour.walk())}",
        f"cost: {format_cost(tour.total_cost)}",
    ]
    return "\n".join(lines) + "\n"


def tour_json(tour: Tour) -> dict:
    return {
        "stops": list(tour.stops),
        "walk": list(tour.walk()),
        "legs": [path_json(leg) for leg in tour.legs],
        "total_cost": tour.total_cost,
    }
