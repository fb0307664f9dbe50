import json

from wayfinder.dijkstra import run_dijkstra
from wayfinder.graph import build_graph
from wayfinder.planner import metric_closure, solve_tsp_exact
from wayfinder.render import (
    format_dot,
    format_label_table,
    format_path,
    format_tour,
    label_table_json,
    spanning_tree_json,
    to_canonical_json,
    tour_json,
)


def test_label_table_rows(fig2):
    table, _ = run_dijkstra(fig2, "A")
    lines = format_label_table(table).splitlines()
    assert lines[0].split() == ["node", "dist", "last", "shaded"]
    rows = {line.split()[0]: line.split() for line in lines[1:]}
    assert rows["B"] == ["B", "3", "C", "yes"]
    assert rows["A"] == ["A", "0", "-", "yes"]


def test_label_table_blank_rows():
    g = build_graph(["A", "B"], [])
    table, _ = run_dijkstra(g, "A")
    rows = {line.split()[0]: line.split() for line in format_label_table(table).splitlines()[1:]}
    assert rows["B"] == ["B", "-", "-", "no"]


def test_dot_marks_tree_edges(fig2):
    table, tree = run_dijkstra(fig2, "A")
    dot = format_dot(fig2, tree)
    assert dot.startswith("graph network {")
    assert '"A" -- "C" [label="2", style=bold];' in dot
    assert '"A" -- "B" [label="4"];' in dot
    # One line per node and per edge, plus braces.
    assert len(dot.splitlines()) == 2 + len(fig2.nodes) + len(fig2.edges)


def test_dot_directed_connector():
    g = build_graph(["A", "B"], [("A", "B", 1)], directed=True)
    dot = format_dot(g)
    assert dot.startswith("digraph network {")
    assert '"A" -> "B"' in dot


def test_canonical_json_is_a_fixed_point(fig2):
    table, tree = run_dijkstra(fig2, "A")
    blob = to_canonical_json({"table": label_table_json(table), "tree": spanning_tree_json(tree)})
    assert to_canonical_json(json.loads(blob)) == blob


def test_path_and_tour_text(fig2):
    mc = metric_closure(fig2, ["A", "F"])
    tour = solve_tsp_exact(mc, "A")
    assert format_path(mc.witness[("A", "F")]) == "cost 13: A C B D E F\n"
    text = format_tour(tour)
    assert "stops: A F A" in text
    assert "cost: 26" in text
    blob = to_canonical_json(tour_json(tour))
    assert to_canonical_json(json.loads(blob)) == blob
