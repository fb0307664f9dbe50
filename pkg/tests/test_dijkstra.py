import random

import pytest
from hypothesis import given, settings

from generators import graph_strategy, random_graph
from oracles import brute_force_dists, brute_force_shortest_walks
from wayfinder.errors import Unreachable, UnknownNode
from wayfinder.graph import Graph, build_graph, validate_path
from wayfinder.dijkstra import (
    all_shortest_paths,
    extract_path,
    run_dijkstra,
    selection_order,
)

# Frozen from the brute-force oracle over the shipped fixture.
FIG2_DIST = {"A": 0.0, "B": 3.0, "C": 2.0, "D": 8.0, "E": 10.0, "F": 13.0}
FIG2_LAST = {"A": None, "B": "C", "C": "A", "D": "B", "E": "D", "F": "E"}


class TestRunDijkstra:
    def test_first_selection_is_cheapest_origin_neighbor(self, fig2):
        assert selection_order(fig2, "A")[0] == "C"

    def test_origin_row(self, fig2):
        table, _ = run_dijkstra(fig2, "A")
        assert table["A"].dist == 0.0
        assert table["A"].last is None
        assert table["A"].shaded

    def test_fig2_table(self, fig2):
        table, tree = run_dijkstra(fig2, "A")
        assert {n: table[n].dist for n in fig2.nodes} == FIG2_DIST
        assert {n: table[n].last for n in fig2.nodes} == FIG2_LAST
        assert tree.dist == FIG2_DIST
        assert all(table[n].shaded for n in fig2.nodes)

    def test_matches_oracle_on_fig2_from_every_origin(self, fig2):
        for origin in fig2.nodes:
            _, tree = run_dijkstra(fig2, origin)
            assert tree.dist == brute_force_dists(fig2, origin)

    def test_unknown_origin(self, fig2):
        with pytest.raises(UnknownNode):
            run_dijkstra(fig2, "Z")

    def test_unreachable_nodes_stay_blank(self):
        g = build_graph(["A", "B", "C"], [("A", "B", 1)])
        table, tree = run_dijkstra(g, "A")
        assert table["C"].blank
        assert not table["C"].shaded
        assert "C" not in tree.dist
        assert "C" not in tree.parent

    @settings(max_examples=80, deadline=None)
    @given(graph_strategy(max_nodes=7))
    def test_oracle_equivalence_random(self, g):
        for origin in g.nodes:
            _, tree = run_dijkstra(g, origin)
            assert tree.dist == brute_force_dists(g, origin)

    @settings(max_examples=60, deadline=None)
    @given(graph_strategy(max_nodes=8))
    def test_relaxation_inequality_at_fixpoint(self, g):
        for origin in g.nodes:
            _, tree = run_dijkstra(g, origin)
            for e in g.edges:
                if e.src in tree.dist and e.dst in tree.dist:
                    assert tree.dist[e.dst] <= tree.dist[e.src] + e.cost
                    if not g.directed:
                        assert tree.dist[e.src] <= tree.dist[e.dst] + e.cost

    @settings(max_examples=60, deadline=None)
    @given(graph_strategy(max_nodes=8))
    def test_tree_consistency_and_acyclicity(self, g):
        for origin in g.nodes:
            _, tree = run_dijkstra(g, origin)
            for child, parent in tree.parent.items():
                edge = g.edge_between(parent, child)
                assert edge is not None
                assert tree.dist[child] == tree.dist[parent] + edge.cost
                hops, at = 0, child
                while at != origin:
                    at = tree.parent[at]
                    hops += 1
                    assert hops <= len(g.nodes)

    @settings(max_examples=60, deadline=None)
    @given(graph_strategy(max_nodes=8))
    def test_shading_order_has_nondecreasing_dist(self, g):
        for origin in g.nodes:
            _, tree = run_dijkstra(g, origin)
            order = selection_order(g, origin)
            dists = [tree.dist[n] for n in order]
            assert dists == sorted(dists)

    def test_edge_addition_never_increases_dist(self):
        rng = random.Random(20)
        for _ in range(40):
            g = random_graph(rng, max_nodes=7, directed=False)
            present = {frozenset((e.src, e.dst)) for e in g.edges}
            missing = [
                (a, b)
                for i, a in enumerate(g.nodes)
                for b in g.nodes[i + 1:]
                if frozenset((a, b)) not in present
            ]
            if not missing:
                continue
            extra = missing[rng.randrange(len(missing))]
            bigger = Graph(
                g.nodes,
                list(g.edges) + [(extra[0], extra[1], float(rng.randint(0, 10)))],
                directed=False,
            )
            for origin in g.nodes:
                _, before = run_dijkstra(g, origin)
                _, after = run_dijkstra(bigger, origin)
                for node, dist in before.dist.items():
                    assert after.dist[node] <= dist


class TestExtractPath:
    def test_fig2_path_to_f(self, fig2):
        _, tree = run_dijkstra(fig2, "A")
        p = extract_path(tree, "F")
        assert p.nodes() == ("A", "C", "B", "D", "E", "F")
        assert p.total_cost == 13.0
        assert validate_path(fig2, p)

    def test_destination_equals_origin(self, fig2):
        _, tree = run_dijkstra(fig2, "A")
        p = extract_path(tree, "A")
        assert p.edges == ()
        assert p.total_cost == 0.0

    def test_unreachable_destination(self):
        g = build_graph(["A", "B"], [])
        _, tree = run_dijkstra(g, "A")
        with pytest.raises(Unreachable):
            extract_path(tree, "B")

    def test_unknown_destination(self, fig2):
        _, tree = run_dijkstra(fig2, "A")
        with pytest.raises(UnknownNode):
            extract_path(tree, "Z")

    @settings(max_examples=50, deadline=None)
    @given(graph_strategy(max_nodes=8))
    def test_all_extracted_paths_validate(self, g):
        for origin in g.nodes:
            _, tree = run_dijkstra(g, origin)
            for dest in tree.dist:
                p = extract_path(tree, dest)
                assert validate_path(g, p)
                assert p.total_cost == tree.dist[dest]


class TestAllShortestPaths:
    def test_diamond_has_two(self):
        g = build_graph(
            ["A", "B", "C", "D"],
            [("A", "B", 1), ("A", "C", 1), ("B", "D", 1), ("C", "D", 1)],
        )
        paths = all_shortest_paths(g, "A", "D")
        assert [p.nodes() for p in paths] == [("A", "B", "D"), ("A", "C", "D")]
        assert all(p.total_cost == 2.0 for p in paths)

    def test_fig2_unique_path(self, fig2):
        paths = all_shortest_paths(fig2, "A", "F")
        assert [p.nodes() for p in paths] == [("A", "C", "B", "D", "E", "F")]

    def test_origin_equals_destination(self, fig2):
        paths = all_shortest_paths(fig2, "A", "A")
        assert len(paths) == 1
        assert paths[0].edges == ()
        assert paths[0].total_cost == 0.0

    def test_unreachable_gives_empty_list(self):
        g = build_graph(["A", "B"], [])
        assert all_shortest_paths(g, "A", "B") == []

    def test_cap_truncates_deterministically(self):
        # 3 parallel diamonds in sequence: 2**3 = 8 equal-cost paths.
        nodes, edges = ["s"], []
        prev = "s"
        for i in range(3):
            up, down, nxt = f"u{i}", f"d{i}", f"m{i}"
            nodes += [up, down, nxt]
            edges += [(prev, up, 1), (prev, down, 1), (up, nxt, 1), (down, nxt, 1)]
            prev = nxt
        g = build_graph(nodes, edges)
        full = all_shortest_paths(g, "s", prev)
        assert len(full) == 8
        capped = all_shortest_paths(g, "s", prev, cap=3)
        assert capped == full[:3]

    def test_zero_cost_cycle_terminates(self):
        g = build_graph(["A", "B", "C"], [("A", "B", 0), ("B", "C", 0), ("A", "C", 0)])
        paths = all_shortest_paths(g, "A", "C")
        assert [p.nodes() for p in paths] == [("A", "B", "C"), ("A", "C")]
        assert all(p.total_cost == 0.0 for p in paths)

    def test_unknown_endpoints(self, fig2):
        with pytest.raises(UnknownNode):
            all_shortest_paths(fig2, "A", "Z")

    @settings(max_examples=60, deadline=None)
    @given(graph_strategy(max_nodes=7, directed=False))
    def test_walks_match_oracle(self, g):
        nodes = g.nodes
        origin, dest = nodes[0], nodes[-1]
        walks = [p.nodes() for p in all_shortest_paths(g, origin, dest)]
        assert walks == brute_force_shortest_walks(g, origin, dest)
        for p in all_shortest_paths(g, origin, dest):
            assert validate_path(g, p)
