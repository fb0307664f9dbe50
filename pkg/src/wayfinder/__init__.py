"""Shortest-path tools for weighted networks, plus an interactive workbench.

The package splits into a pure algorithmic core (graph model, label-table
solver, tour planners, map parsing, path statistics) and thin delivery layers
(CLI, HTTP API). Everything in the core is deterministic and side-effect
free.
"""

from .analysis import PathStats, path_stats, ring_lattice_with_shortcuts
from .dijkstra import (
    LabelTable,
    NodeLabel,
    SpanningTree,
    all_shortest_paths,
    extract_path,
    run_dijkstra,
    selection_order,
)
from .errors import WayfinderError
from .graph import (
    Edge,
    Graph,
    Path,
    build_graph,
    format_edge_list,
    parse_edge_list,
    path_from_edge_names,
    path_from_nodes,
    validate_path,
)
from .mapkit import (
    CityMap,
    GridMap,
    city_to_graph,
    grid_to_graph,
    parse_city_map,
    parse_grid,
    serialize_city_map,
)
from .planner import (
    MetricClosure,
    Tour,
    metric_closure,
    solve_tsp_exact,
    solve_tsp_greedy,
)
from .session import (
    Move,
    Session,
    Verdict,
    reveal_solution,
    self_play,
    start_session,
    submit_move,
)

__version__ = "0.1.0"

__all__ = [
    "CityMap",
    "Edge",
    "Graph",
    "GridMap",
    "LabelTable",
    "MetricClosure",
    "Move",
    "NodeLabel",
    "Path",
    "PathStats",
    "Session",
    "SpanningTree",
    "Tour",
    "Verdict",
    "WayfinderError",
    "all_shortest_paths",
    "build_graph",
    "city_to_graph",
    "extract_path",
    "format_edge_list",
    "grid_to_graph",
    "metric_closure",
    "parse_city_map",
    "parse_edge_list",
    "parse_grid",
    "path_from_edge_names",
    "path_from_nodes",
    "path_stats",
    "reveal_solution",
    "ring_lattice_with_shortcuts",
    "run_dijkstra",
    "selection_order",
    "self_play",
    "serialize_city_map",
    "solve_tsp_exact",
    "solve_tsp_greedy",
    "start_session",
    "submit_move",
    "validate_path",
]
