"""Single-source shortest paths, worksheet style.

The solver mirrors the pencil-and-paper procedure: keep a label table with a
(dist, last, shaded) row per node, repeatedly pick the unshaded node with the
smallest non-blank dist, relax its neighbors, shade it. Selection scans every
unshaded labeled node, so tie order is exactly lexicographic on node ids, and
the run halts once no unshaded node has a dist, which also covers graphs with
unreachable nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Unreachable, UnknownNode
from .graph import Graph, NodeId, Path

DEFAULT_PATH_CAP = 1000


@dataclass(frozen=True)
class NodeLabel:
    """One worksheet row: best-known dist, the predecessor that set it, shaded."""

    dist: float | None = None
    last: NodeId | None = None
    shaded: bool = False

    @property
    def blank(self) -> bool:
        return self.dist is None


class LabelTable:
    """The entire mutable state of a worksheet run: origin plus one row per node."""

    def __init__(self, origin: NodeId, nodes) -> None:
        self.origin = origin
        self.labels: dict[NodeId, NodeLabel] = {n: NodeLabel() for n in sorted(nodes)}
        self.labels[origin] = NodeLabel(dist=0.0, last=None, shaded=True)

    def __getitem__(self, node: NodeId) -> NodeLabel:
        return self.labels[node]

    def set(self, node: NodeId, label: NodeLabel) -> None:
        if node not in self.labels:
            raise UnknownNode(f"unknown node {node!r}")
        self.labels[node] = label

    def unshaded_labeled(self) -> list[tuple[NodeId, float]]:
        """Nodes still eligible as Current: unshaded with a non-blank dist."""
        return [(n, lb.dist) for n, lb in self.labels.items() if not lb.shaded and lb.dist is not None]

    def frontier(self) -> tuple[float, tuple[NodeId, ...]] | None:
        """Minimal unshaded dist and every node tied at it, or None when done."""
        eligible = self.unshaded_labeled()
        if not eligible:
            return None
        lowest = min(d for _, d in eligible)
        return lowest, tuple(sorted(n for n, d in eligible if d == lowest))

    def dist_column(self) -> dict[NodeId, float | None]:
        return {n: lb.dist for n, lb in self.labels.items()}

    def shaded_set(self) -> frozenset[NodeId]:
        return frozenset(n for n, lb in self.labels.items() if lb.shaded)

    def copy(self) -> "LabelTable":
        dup = LabelTable.__new__(LabelTable)
        dup.origin = self.origin
        dup.labels = dict(self.labels)
        return dup

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabelTable)
            and self.origin == other.origin
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        done = sum(1 for lb in self.labels.values() if lb.shaded)
        return f"LabelTable(origin={self.origin!r}, {done}/{len(self.labels)} shaded)"


@dataclass(frozen=True)
class SpanningTree:
    """Origin-rooted predecessor tree realizing a shortest path to each reachable node.

    ``parent`` covers reachable non-origin nodes only; ``dist`` includes the
    origin at 0. The source graph is kept so paths can be materialized.
    """

    origin: NodeId
    parent: dict[NodeId, NodeId]
    dist: dict[NodeId, float]
    graph: Graph = field(repr=False, compare=False)


def _settle(g: Graph, origin: NodeId) -> tuple[dict[NodeId, float], dict[NodeId, NodeId], list[NodeId]]:
    """Run the worksheet loop; returns (dist, parent, selection order).

    The origin is shaded up front and is not part of the selection order.
    Relaxation updates only on strictly smaller dist, so the first-found
    predecessor is kept under ties.
    """
    g.require_node(origin)
    dist: dict[NodeId, float] = {origin: 0.0}
    parent: dict[NodeId, NodeId] = {}
    shaded: set[NodeId] = set()
    order: list[NodeId] = []

    while True:
        eligible = [(d, n) for n, d in dist.items() if n not in shaded]
        if not eligible:
            break
        d, current = min(eligible)  # ties fall to the lexicographically smallest id
        shaded.add(current)
        if current != origin:
            order.append(current)
        for nbr, cost in g.neighbors(current):
            candidate = d + cost
            if nbr not in dist or candidate < dist[nbr]:
                dist[nbr] = candidate
                parent[nbr] = current
    return dist, parent, order


def run_dijkstra(g: Graph, origin: NodeId) -> tuple[LabelTable, SpanningTree]:
    """Compute the completed label table and spanning tree from ``origin``.

    Reachable nodes end up shaded with their minimum total cost; unreachable
    nodes keep blank rows and appear in neither tree map.
    """
    dist, parent, _ = _settle(g, origin)
    table = LabelTable(origin, g.nodes)
    for node in g.nodes:
        if node in dist:
            table.set(node, NodeLabel(dist=dist[node], last=parent.get(node), shaded=True))
    return table, SpanningTree(origin=origin, parent=parent, dist=dist, graph=g)


def selection_order(g: Graph, origin: NodeId) -> list[NodeId]:
    """The sequence of Current picks the batch solver makes (origin excluded)."""
    _, _, order = _settle(g, origin)
    return order


def extract_path(tree: SpanningTree, destination: NodeId) -> Path:
    """Read the origin-to-destination path off the tree's parent chain."""
    if destination not in tree.dist:
        if not tree.graph.has_node(destination):
            raise UnknownNode(f"unknown node {destination!r}")
        raise Unreachable(f"{destination!r} is not reachable from {tree.origin!r}")
    chain = [destination]
    while chain[-1] != tree.origin:
        chain.append(tree.parent[chain[-1]])
    chain.reverse()
    edges = tuple(tree.graph.edge_between(u, v) for u, v in zip(chain, chain[1:]))
    return Path(tree.origin, destination, edges, sum(e.cost for e in edges))


def all_shortest_paths(
    g: Graph,
    origin: NodeId,
    destination: NodeId,
    cap: int = DEFAULT_PATH_CAP,
) -> list[Path]:
    """Every minimum-cost simple path from origin to destination.

    Paths come out in lexicographic order of their node sequences. The list is
    complete whenever its length is below ``cap``; equal-cost path counts can
    grow exponentially, so enumeration stops once ``cap`` paths are collected.
    """
    g.require_node(origin)
    g.require_node(destination)
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    if origin == destination:
        return [Path(origin, destination, (), 0.0)]

    dist, _, _ = _settle(g, origin)
    if destination not in dist:
        return []

    # Edges u->v with dist[u] + cost == dist[v] form the DAG of optimal moves.
    succ: dict[NodeId, list[NodeId]] = {n: [] for n in dist}
    for u in dist:
        for v, cost in g.neighbors(u):
            if v in dist and dist[u] + cost == dist[v]:
                succ[u].append(v)

    # Keep only nodes that can still reach the destination inside the DAG.
    useful: set[NodeId] = {destination}
    frontier = [destination]
    pred: dict[NodeId, list[NodeId]] = {n: [] for n in dist}
    for u, vs in succ.items():
        for v in vs:
            pred[v].append(u)
    while frontier:
        v = frontier.pop()
        for u in pred[v]:
            if u not in useful:
                useful.add(u)
                frontier.append(u)

    paths: list[Path] = []
    walk: list[NodeId] = [origin]
    on_walk: set[NodeId] = {origin}

    def explore(u: NodeId) -> bool:
        # Returns False once the cap is hit to unwind the recursion.
        if u == destination:
            edges = tuple(g.edge_between(a, b) for a, b in zip(walk, walk[1:]))
            paths.append(Path(origin, destination, edges, sum(e.cost for e in edges)))
            return len(paths) < cap
        for v in sorted(succ[u]):
            if v in useful and v not in on_walk:
                walk.append(v)
                on_walk.add(v)
                keep_going = explore(v)
                walk.pop()
                on_walk.discard(v)
                if not keep_going:
                    return False
        return True

    if origin in useful:
        explore(origin)
    return paths
