"""Network-level path statistics and a lattice-plus-shortcuts demonstrator.

The headline statistic is the mean geodesic (shortest-path) distance over all
ordered node pairs, which drops sharply once a sparse lattice gains a few
random shortcut edges; that drop is the whole point of the generator below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dijkstra import run_dijkstra
from .errors import InvalidParams
from .graph import Edge, Graph


@dataclass(frozen=True)
class PathStats:
    """Geodesic statistics over ordered node pairs.

    Unreachable pairs are excluded from the mean and diameter but counted, so
    nothing is silently dropped; with no reachable pairs both statistics are 0.
    """

    mean_geodesic: float
    diameter: float
    reachable_pairs: int
    unreachable_pairs: int

    def to_json_dict(self) -> dict:
        return {
            "mean_geodesic": self.mean_geodesic,
            "diameter": self.diameter,
            "reachable_pairs": self.reachable_pairs,
            "unreachable_pairs": self.unreachable_pairs,
        }


def path_stats(g: Graph) -> PathStats:
    """Mean geodesic and diameter via one solver run per origin."""
    total = 0.0
    diameter = 0.0
    reachable = 0
    n = len(g.nodes)
    for origin in g.nodes:
        _, tree = run_dijkstra(g, origin)
        for dest, dist in tree.dist.items():
            if dest == origin:
                continue
            total += dist
            diameter = max(diameter, dist)
            reachable += 1
    mean = total / reachable if reachable else 0.0
    return PathStats(
        mean_geodesic=mean,
        diameter=diameter,
        reachable_pairs=reachable,
        unreachable_pairs=n * (n - 1) - reachable,
    )


def ring_lattice_with_shortcuts(n: int, k: int, shortcuts: int, seed: int) -> Graph:
    """A ring lattice with ``shortcuts`` extra random unit-cost edges.

    Construction is fully deterministic for a fixed seed:

    1. Nodes are "0".."n-1". Each node i is joined to its k nearest ring
       neighbors, i.e. to (i+j) mod n for j in 1..k/2.
    2. All non-adjacent unordered pairs are listed in increasing (i, j)
       order, and ``shortcuts`` of them are drawn with
       ``random.Random(seed).sample`` over that list.

    Costs are all 1. Requires n >= 3, even k < n, shortcuts >= 0, and enough
    vacant pairs to host the shortcuts.
    """
    if n < 3:
        raise InvalidParams("n must be at least 3")
    if k < 0 or k % 2 != 0:
        raise InvalidParams("k must be a nonnegative even number")
    if k >= n:
        raise InvalidParams("k must be smaller than n")
    if shortcuts < 0:
        raise InvalidParams("shortcuts must be nonnegative")

    nodes = [str(i) for i in range(n)]
    ring: set[tuple[int, int]] = set()
    for i in range(n):
        for j in range(1, k // 2 + 1):
            a, b = i, (i + j) % n
            ring.add((min(a, b), max(a, b)))

    vacant = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in ring
    ]
    if shortcuts > len(vacant):
        raise InvalidParams(f"only {len(vacant)} vacant pairs available for {shortcuts} shortcuts")
    chosen = random.Random(seed).sample(vacant, shortcuts)

    edges = [Edge(str(a), str(b), 1.0) for a, b in sorted(ring | set(chosen))]
    return Graph(nodes, edges, directed=False)


def format_stats(stats: PathStats) -> str:
    """Flat key=value block, one statistic per line."""
    fields = stats.to_json_dict()
    return "\n".join(f"{key}={value}" for key, value in fields.items()) + "\n"
