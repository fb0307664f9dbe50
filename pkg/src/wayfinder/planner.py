"""Closed-tour trip planning over shortest-path distances.

Real city networks are rarely complete, so tours are planned on the metric
closure of the chosen terminals: every pairwise leg is a shortest path in the
underlying network, and legs may pass through non-terminal nodes. The exact
solver enumerates interior permutations outright (desk-scale instances only);
the greedy solver is the classic nearest-neighbor baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .dijkstra import extract_path, run_dijkstra
from .errors import DisconnectedTerminals, TooManyTerminals, UnknownNode
from .graph import Graph, NodeId, Path

EXACT_TERMINAL_LIMIT = 12


@dataclass(frozen=True)
class MetricClosure:
    """Pairwise shortest distances among terminals plus witness paths."""

    terminals: tuple[NodeId, ...]
    dist: dict[tuple[NodeId, NodeId], float]
    witness: dict[tuple[NodeId, NodeId], Path]

    def leg(self, a: NodeId, b: NodeId) -> Path:
        try:
            return self.witness[(a, b)]
        except KeyError:
            raise DisconnectedTerminals(f"no route between terminals {a!r} and {b!r}") from None

    def distance(self, a: NodeId, b: NodeId) -> float:
        try:
            return self.dist[(a, b)]
        except KeyError:
            raise DisconnectedTerminals(f"no route between terminals {a!r} and {b!r}") from None


@dataclass(frozen=True)
class Tour:
    """A closed walk: ordered stops (first = last) and one shortest-path leg per hop."""

    stops: tuple[NodeId, ...]
    legs: tuple[Path, ...]
    total_cost: float

    def walk(self) -> tuple[NodeId, ...]:
        """The full node walk in the original network, legs expanded."""
        nodes: list[NodeId] = [self.stops[0]]
        for leg in self.legs:
            nodes.extend(leg.nodes()[1:])
        return tuple(nodes)


def metric_closure(g: Graph, terminals: Iterable[NodeId]) -> MetricClosure:
    """Shortest distances and witness paths between every ordered terminal pair.

    Raises DisconnectedTerminals as soon as any terminal cannot reach another.
    """
    terms = tuple(sorted(set(terminals)))
    for t in terms:
        g.require_node(t)
    dist: dict[tuple[NodeId, NodeId], float] = {}
    witness: dict[tuple[NodeId, NodeId], Path] = {}
    for a in terms:
        _, tree = run_dijkstra(g, a)
        for b in terms:
            if b == a:
                continue
            if b not in tree.dist:
                raise DisconnectedTerminals(f"terminal {b!r} is unreachable from {a!r}")
            dist[(a, b)] = tree.dist[b]
            witness[(a, b)] = extract_path(tree, b)
    return MetricClosure(terminals=terms, dist=dist, witness=witness)


def _require_home(mc: MetricClosure, home: NodeId) -> list[NodeId]:
    if home not in mc.terminals:
        raise UnknownNode(f"home {home!r} is not one of the terminals")
    return sorted(t for t in mc.terminals if t != home)


def _assemble(mc: MetricClosure, stops: tuple[NodeId, ...]) -> Tour:
    if len(stops) == 2 and stops[0] == stops[1]:
        return Tour(stops=stops, legs=(), total_cost=0.0)
    legs = tuple(mc.leg(a, b) for a, b in zip(stops, stops[1:]))
    return Tour(stops=stops, legs=legs, total_cost=sum(leg.total_cost for leg in legs))


def solve_tsp_exact(mc: MetricClosure, home: NodeId) -> Tour:
    """Cheapest closed tour over all terminals, by exhaustive permutation.

    Interior orderings are tried in lexicographic order and only strictly
    cheaper tours replace the incumbent, so tied optima resolve to the
    lexicographically smallest stop sequence.
    """
    interior = _require_home(mc, home)
    if len(mc.terminals) > EXACT_TERMINAL_LIMIT:
        raise TooManyTerminals(
            f"{len(mc.terminals)} terminals exceed the exact-solver limit of {EXACT_TERMINAL_LIMIT}"
        )
    if not interior:
        return _assemble(mc, (home, home))
    best_cost: float | None = None
    best_stops: tuple[NodeId, ...] | None = None
    for perm in permutations(interior):
        stops = (home, *perm, home)
        cost = sum(mc.distance(a, b) for a, b in zip(stops, stops[1:]))
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_stops = stops
    return _assemble(mc, best_stops)


def solve_tsp_greedy(mc: MetricClosure, home: NodeId) -> Tour:
    """Nearest-neighbor tour from home; ties pick the smallest node id."""
    remaining = set(_require_home(mc, home))
    stops: list[NodeId] = [home]
    while remaining:
        here = stops[-1]
        nearest = min(remaining, key=lambda t: (mc.distance(here, t), t))
        stops.append(nearest)
        remaining.discard(nearest)
    stops.append(home)
    return _assemble(mc, tuple(stops))
