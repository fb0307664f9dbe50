"""Immutable weighted-network model and the edge-list text format.

A network is a set of string-labeled nodes plus edges carrying a nonnegative
finite cost and an optional name (street label). Undirected networks store
each edge once; neighbor queries see it from both endpoints. Everything here
is validated at construction and never mutated afterwards, so graphs can be
shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DanglingEndpoint,
    DuplicateEdge,
    DuplicateNode,
    InvalidNodeId,
    NegativeCost,
    ParseError,
    SelfLoop,
    UnknownNode,
    ValidationError,
)

NodeId = str

# '#' opens a comment in the edge-list format; whitespace separates tokens.
_RESERVED_CHARS = frozenset("#")


def check_node_id(token: str) -> NodeId:
    """Validate a node token: non-empty, printable, no whitespace or '#'."""
    if not isinstance(token, str) or not token:
        raise InvalidNodeId(f"node id must be a non-empty string, got {token!r}")
    for ch in token:
        if ch.isspace() or ch in _RESERVED_CHARS or not ch.isprintable():
            raise InvalidNodeId(f"node id {token!r} contains forbidden character {ch!r}")
    return token


def check_cost(value: float) -> float:
    value = float(value)
    if math.isnan(value) or math.isinf(value) or value < 0:
        raise NegativeCost(f"edge cost must be a finite nonnegative number, got {value!r}")
    return value


@dataclass(frozen=True)
class Edge:
    """One connection between two distinct nodes, as written in its source."""

    src: NodeId
    dst: NodeId
    cost: float
    name: str | None = None

    def other(self, node: NodeId) -> NodeId:
        if node == self.src:
            return self.dst
        if node == self.dst:
            return self.src
        raise UnknownNode(f"{node!r} is not an endpoint of edge {self.src}-{self.dst}")


class Graph:
    """Validated, immutable weighted network.

    ``neighbors`` and the edge accessors are the only queries the algorithms
    need; all of them return data in sorted order so downstream results never
    depend on input ordering.
    """

    __slots__ = ("_directed", "_nodes", "_edges", "_adj", "_by_pair", "_by_name")

    def __init__(
        self,
        nodes: Iterable[NodeId],
        edges: Iterable[Edge | tuple],
        directed: bool = False,
    ) -> None:
        self._directed = bool(directed)

        seen: set[NodeId] = set()
        for n in nodes:
            check_node_id(n)
            if n in seen:
                raise DuplicateNode(f"node {n!r} declared twice")
            seen.add(n)

        normalized: list[Edge] = []
        by_pair: dict[tuple[NodeId, NodeId], Edge] = {}
        by_name: dict[str, list[Edge]] = {}
        for raw in edges:
            e = raw if isinstance(raw, Edge) else Edge(*raw)
            e = Edge(check_node_id(e.src), check_node_id(e.dst), check_cost(e.cost), e.name)
            if e.src == e.dst:
                raise SelfLoop(f"self-loop on node {e.src!r}")
            for endpoint in (e.src, e.dst):
                if endpoint not in seen:
                    raise DanglingEndpoint(f"edge {e.src}-{e.dst} references undeclared node {endpoint!r}")
            key = (e.src, e.dst)
            rkey = (e.dst, e.src)
            if key in by_pair or (not self._directed and rkey in by_pair):
                raise DuplicateEdge(f"more than one edge between {e.src!r} and {e.dst!r}")
            by_pair[key] = e
            if not self._directed:
                by_pair[rkey] = e
            if e.name is not None:
                by_name.setdefault(e.name, []).append(e)
            normalized.append(e)

        self._nodes: tuple[NodeId, ...] = tuple(sorted(seen))
        self._edges: tuple[Edge, ...] = tuple(sorted(normalized, key=lambda e: (e.src, e.dst)))
        self._by_pair = by_pair
        self._by_name = by_name

        adj: dict[NodeId, list[tuple[NodeId, float]]] = {n: [] for n in self._nodes}
        for e in self._edges:
            adj[e.src].append((e.dst, e.cost))
            if not self._directed:
                adj[e.dst].append((e.src, e.cost))
        self._adj = {n: tuple(sorted(nbrs)) for n, nbrs in adj.items()}

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self._nodes

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def has_node(self, node: NodeId) -> bool:
        return node in self._adj

    def require_node(self, node: NodeId) -> NodeId:
        if node not in self._adj:
            raise UnknownNode(f"unknown node {node!r}")
        return node

    def neighbors(self, node: NodeId) -> tuple[tuple[NodeId, float], ...]:
        """All (neighbor, cost) pairs one edge away from ``node``."""
        self.require_node(node)
        return self._adj[node]

    def edge_between(self, u: NodeId, v: NodeId) -> Edge | None:
        """The stored edge connecting u to v (orientation-aware if directed)."""
        return self._by_pair.get((u, v))

    def edges_named(self, name: str) -> tuple[Edge, ...]:
        return tuple(self._by_name.get(name, ()))

    def __contains__(self, node: NodeId) -> bool:
        return node in self._adj

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        return f"Graph({kind}, {len(self._nodes)} nodes, {len(self._edges)} edges)"


def build_graph(
    nodes: Iterable[NodeId],
    edges: Iterable[Edge | tuple],
    directed: bool = False,
) -> Graph:
    """Construct a validated Graph; raises on any invariant violation."""
    return Graph(nodes, edges, directed)


@dataclass(frozen=True)
class Path:
    """An ordered edge sequence from origin to destination.

    ``total_cost`` is the plain left-to-right sum of the member edge costs,
    which matches how the engine accumulates distances, so equality checks
    against computed dist values are exact.
    """

    origin: NodeId
    destination: NodeId
    edges: tuple[Edge, ...]
    total_cost: float

    def nodes(self) -> tuple[NodeId, ...]:
        """The node walk realized by the edge chain, starting at origin."""
        walk = [self.origin]
        for e in self.edges:
            walk.append(e.other(walk[-1]))
        return tuple(walk)

    def __len__(self) -> int:
        return len(self.edges)


def path_from_nodes(g: Graph, walk: Sequence[NodeId]) -> Path:
    """Build a Path along consecutive nodes of ``walk`` (must all be edges)."""
    if not walk:
        raise ValidationError("a path needs at least its origin node")
    edges = []
    for u, v in zip(walk, walk[1:]):
        e = g.edge_between(u, v)
        if e is None:
            raise UnknownNode(f"no edge between {u!r} and {v!r}")
        edges.append(e)
    total = sum(e.cost for e in edges)
    return Path(walk[0], walk[-1], tuple(edges), total)


def path_from_edge_names(g: Graph, origin: NodeId, names: Sequence[str]) -> Path:
    """Resolve a walk given by edge names, e.g. street names on a city map.

    Each name must match exactly one edge incident to the walk's current node.
    """
    g.require_node(origin)
    at = origin
    edges = []
    for name in names:
        candidates = [e for e in g.edges_named(name) if at in (e.src, e.dst)]
        if g.directed:
            candidates = [e for e in candidates if e.src == at]
        if not candidates:
            raise ValidationError(f"no edge named {name!r} leaves node {at!r}")
        if len(candidates) > 1:
            raise ValidationError(f"edge name {name!r} is ambiguous at node {at!r}")
        edge = candidates[0]
        edges.append(edge)
        at = edge.other(at)
    total = sum(e.cost for e in edges)
    return Path(origin, at, tuple(edges), total)


def validate_path(g: Graph, p: Path) -> bool:
    """True iff ``p`` is a real path in ``g`` whose cost sum is exact.

    Never raises: malformed paths referencing unknown nodes or edges simply
    fail validation.
    """
    if not g.has_node(p.origin) or not g.has_node(p.destination):
        return False
    at = p.origin
    for e in p.edges:
        stored = g.edge_between(e.src, e.dst)
        if stored is None or stored.cost != e.cost or stored.name != e.name:
            return False
        if at == e.src:
            at = e.dst
        elif not g.directed and at == e.dst:
            at = e.src
        else:
            return False
    if at != p.destination:
        return False
    return p.total_cost == sum(e.cost for e in p.edges)


# --- Edge-list text format -------------------------------------------------
#
# Canonical shape (UTF-8, newline-terminated lines, single spaces):
#
#   # optional comments
#   undirected            <- or "directed"
#   FROM TO COST [NAME]
#   ...
#
# A line holding a single token declares an isolated node, which a pure edge
# list could not otherwise represent; the serializer only emits such lines
# for nodes with no incident edges.


def format_cost(value: float) -> str:
    """Render a cost the way it would be written in a file: 4, not 4.0."""
    if value == int(value):
        return str(int(value))
    return repr(value)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a Graph."""
    directed: bool | None = None
    nodes: list[NodeId] = []
    node_set: set[NodeId] = set()
    edges: list[Edge] = []

    def declare(token: NodeId) -> None:
        if token not in node_set:
            node_set.add(token)
            nodes.append(token)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if directed is None:
            if line == "directed":
                directed = True
            elif line == "undirected":
                directed = False
            else:
                raise ParseError(f"line {lineno}: expected 'directed' or 'undirected', got {line!r}")
            continue
        tokens = line.split()
        if len(tokens) == 1:
            declare(tokens[0])
        elif len(tokens) in (3, 4):
            src, dst, cost_token = tokens[0], tokens[1], tokens[2]
            name = tokens[3] if len(tokens) == 4 else None
            try:
                cost = float(cost_token)
            except ValueError:
                raise ParseError(f"line {lineno}: bad cost {cost_token!r}") from None
            declare(src)
            declare(dst)
            edges.append(Edge(src, dst, cost, name))
        else:
            raise ParseError(f"line {lineno}: expected 'FROM TO COST [NAME]', got {line!r}")

    if directed is None:
        raise ParseError("missing 'directed' or 'undirected' header line")
    try:
        return Graph(nodes, edges, directed)
    except (InvalidNodeId, DuplicateNode, DuplicateEdge, DanglingEndpoint, NegativeCost, SelfLoop) as exc:
        raise ParseError(f"invalid graph: {exc}") from exc


def format_edge_list(g: Graph) -> str:
    """Serialize a Graph to the canonical edge-list text."""
    lines = ["directed" if g.directed else "undirected"]
    for e in g.edges:
        entry = f"{e.src} {e.dst} {format_cost(e.cost)}"
        if e.name is not None:
            entry += f" {e.name}"
        lines.append(entry)
    connected = {e.src for e in g.edges} | {e.dst for e in g.edges}
    for n in g.nodes:
        if n not in connected:
            lines.append(n)
    return "\n".join(lines) + "\n"
