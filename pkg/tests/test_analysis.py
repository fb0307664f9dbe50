from pathlib import Path

import pytest

from generators import random_graph
from oracles import brute_force_all_pairs
from wayfinder.analysis import format_stats, path_stats, ring_lattice_with_shortcuts
from wayfinder.errors import InvalidParams
from wayfinder.graph import Graph, build_graph, format_edge_list

import random

GOLDEN_LATTICE = Path(__file__).parent / "data" / "lattice_n30_k2_s10_seed1.edges"


class TestPathStats:
    def test_two_nodes_one_edge(self):
        stats = path_stats(build_graph(["A", "B"], [("A", "B", 5)]))
        assert stats.mean_geodesic == 5.0
        assert stats.diameter == 5.0
        assert stats.reachable_pairs == 2
        assert stats.unreachable_pairs == 0

    def test_three_node_chain(self):
        stats = path_stats(build_graph(["a", "b", "c"], [("a", "b", 1), ("b", "c", 1)]))
        # Ordered-pair dists are {1,1,1,1,2,2}.
        assert stats.mean_geodesic == 8 / 6
        assert stats.diameter == 2.0
        assert stats.reachable_pairs == 6

    def test_disconnected_pairs_counted_not_averaged(self):
        stats = path_stats(build_graph(["a", "b", "c"], [("a", "b", 1)]))
        assert stats.reachable_pairs == 2
        assert stats.unreachable_pairs == 4
        assert stats.mean_geodesic == 1.0

    def test_edgeless_graph(self):
        stats = path_stats(build_graph(["a", "b"], []))
        assert stats.mean_geodesic == 0.0
        assert stats.diameter == 0.0
        assert stats.reachable_pairs == 0
        assert stats.unreachable_pairs == 2

    @pytest.mark.parametrize("n", [2, 5, 8, 12])
    def test_complete_unit_graph(self, n):
        names = [f"v{i}" for i in range(n)]
        edges = [(names[i], names[j], 1) for i in range(n) for j in range(i + 1, n)]
        stats = path_stats(build_graph(names, edges))
        assert stats.mean_geodesic == 1.0
        assert stats.diameter == 1.0
        assert stats.reachable_pairs == n * (n - 1)

    def test_matches_all_pairs_oracle(self):
        rng = random.Random(8)
        for _ in range(30):
            g = random_graph(rng, max_nodes=8)
            stats = path_stats(g)
            oracle = brute_force_all_pairs(g)
            n = len(g.nodes)
            assert stats.reachable_pairs == len(oracle)
            assert stats.unreachable_pairs == n * (n - 1) - len(oracle)
            if oracle:
                assert stats.mean_geodesic == sum(oracle.values()) / len(oracle)
                assert stats.diameter == max(oracle.values())

    def test_pair_counts_sum_to_ordered_pairs(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(rng, max_nodes=7)
            stats = path_stats(g)
            n = len(g.nodes)
            assert stats.reachable_pairs + stats.unreachable_pairs == n * (n - 1)
            if stats.reachable_pairs:
                assert stats.mean_geodesic <= stats.diameter

    def test_text_block_shape(self):
        text = format_stats(path_stats(build_graph(["A", "B"], [("A", "B", 5)])))
        assert text.splitlines() == [
            "mean_geodesic=5.0",
            "diameter=5.0",
            "reachable_pairs=2",
            "unreachable_pairs=0",
        ]


class TestRingLattice:
    def test_six_cycle(self):
        g = ring_lattice_with_shortcuts(6, 2, 0, 0)
        assert len(g.edges) == 6
        stats = path_stats(g)
        assert stats.diameter == 3.0

    def test_no_shortcuts_is_seed_independent(self):
        a = ring_lattice_with_shortcuts(6, 2, 0, seed=1)
        b = ring_lattice_with_shortcuts(6, 2, 0, seed=999)
        assert a.edges == b.edges

    def test_k4_ring(self):
        g = ring_lattice_with_shortcuts(7, 4, 0, 0)
        assert set(g.neighbors("0")) == {("1", 1.0), ("2", 1.0), ("5", 1.0), ("6", 1.0)}

    def test_golden_edge_list(self):
        g = ring_lattice_with_shortcuts(30, 2, 10, 1)
        assert format_edge_list(g) == GOLDEN_LATTICE.read_text()

    def test_shortcuts_are_new_distinct_edges(self):
        ring = {frozenset((e.src, e.dst)) for e in ring_lattice_with_shortcuts(20, 2, 0, 5).edges}
        with_extra = {frozenset((e.src, e.dst)) for e in ring_lattice_with_shortcuts(20, 2, 7, 5).edges}
        assert ring <= with_extra
        assert len(with_extra) == len(ring) + 7

    @pytest.mark.parametrize(
        "n,k,shortcuts",
        [(2, 2, 0), (5, 3, 0), (5, 6, 0), (4, 2, -1), (4, 2, 100)],
    )
    def test_invalid_params(self, n, k, shortcuts):
        with pytest.raises(InvalidParams):
            ring_lattice_with_shortcuts(n, k, shortcuts, 0)

    def test_shortcuts_shrink_mean_geodesic(self):
        plain = path_stats(ring_lattice_with_shortcuts(20, 2, 0, 2))
        wired = path_stats(ring_lattice_with_shortcuts(20, 2, 5, 2))
        assert wired.mean_geodesic < plain.mean_geodesic
        assert wired.diameter <= plain.diameter

    def test_adding_any_edges_never_increases_stats(self):
        rng = random.Random(12)
        for _ in range(10):
            g = random_graph(rng, max_nodes=7, directed=False)
            present = {frozenset((e.src, e.dst)) for e in g.edges}
            vacant = [
                (a, b)
                for i, a in enumerate(g.nodes)
                for b in g.nodes[i + 1:]
                if frozenset((a, b)) not in present
            ]
            if not vacant:
                continue
            extra = rng.sample(vacant, rng.randint(1, min(3, len(vacant))))
            bigger = Graph(
                g.nodes,
                list(g.edges) + [(a, b, 1.0) for a, b in extra],
                directed=False,
            )
            before, after = path_stats(g), path_stats(bigger)
            assert after.reachable_pairs >= before.reachable_pairs
            if before.reachable_pairs:
                assert after.diameter <= before.diameter or after.reachable_pairs > before.reachable_pairs
