"""Turn human-readable maps into networks.

Two map styles are supported: JSON city maps (named places, numbered
intersections, named streets with lengths) and ASCII grid maps where open
cells are '.', blocked cells are '#', and any other single character marks a
labeled cell. Grid networks use 4-way adjacency with unit cost; blocked cells
get no node at all, so no computed path can ever touch one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DuplicateMarker, ParseError, RaggedRows, UnknownNode, ValidationError
from .graph import Edge, Graph, NodeId, check_node_id

OPEN_CELL = "."
BLOCKED_CELL = "#"


@dataclass(frozen=True)
class Place:
    id: NodeId
    name: str


@dataclass(frozen=True)
class Street:
    name: str
    src: NodeId
    dst: NodeId
    length: float


@dataclass(frozen=True)
class CityMap:
    """Named locations and intersections joined by named streets."""

    places: tuple[Place, ...]
    intersections: tuple[NodeId, ...]
    streets: tuple[Street, ...]

    def node_ids(self) -> tuple[NodeId, ...]:
        return tuple(p.id for p in self.places) + self.intersections


def parse_city_map(text: str) -> CityMap:
    """Parse and validate one city-map JSON document.

    Structural problems raise ParseError; well-formed documents that break a
    map rule (duplicate street name, dangling endpoint, bad length) raise
    ValidationError.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("city map must be a JSON object")

    raw_places = doc.get("places", [])
    raw_intersections = doc.get("intersections", [])
    raw_streets = doc.get("streets", [])
    if not isinstance(raw_places, list) or not isinstance(raw_intersections, list) or not isinstance(raw_streets, list):
        raise ParseError("'places', 'intersections', and 'streets' must be arrays")

    places = []
    for entry in raw_places:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError(f"bad place entry: {entry!r}")
        places.append(Place(id=str(entry["id"]), name=str(entry.get("name", entry["id"]))))
    intersections = tuple(str(i) for i in raw_intersections)

    declared: set[NodeId] = set()
    for node in [p.id for p in places] + list(intersections):
        check_node_id(node)
        if node in declared:
            raise ValidationError(f"node {node!r} declared twice")
        declared.add(node)

    streets = []
    street_names: set[str] = set()
    for entry in raw_streets:
        if not isinstance(entry, dict) or not {"name", "from", "to", "length"} <= set(entry):
            raise ParseError(f"street entries need name/from/to/length: {entry!r}")
        name = str(entry["name"])
        if name in street_names:
            raise ValidationError(f"street name {name!r} used twice")
        street_names.add(name)
        src, dst = str(entry["from"]), str(entry["to"])
        for endpoint in (src, dst):
            if endpoint not in declared:
                raise ValidationError(f"street {name!r} references undeclared node {endpoint!r}")
        length = entry["length"]
        if isinstance(length, bool) or not isinstance(length, (int, float)) or not length >= 0:
            raise ValidationError(f"street {name!r} needs a nonnegative numeric length")
        streets.append(Street(name=name, src=src, dst=dst, length=float(length)))

    return CityMap(places=tuple(places), intersections=intersections, streets=tuple(streets))


def serialize_city_map(cm: CityMap) -> str:
    doc = {
        "places": [{"id": p.id, "name": p.name} for p in cm.places],
        "intersections": list(cm.intersections),
        "streets": [
            {"name": s.name, "from": s.src, "to": s.dst, "length": s.length} for s in cm.streets
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def city_to_graph(cm: CityMap) -> Graph:
    """The undirected network behind a city map; street names ride on edges."""
    edges = [Edge(s.src, s.dst, s.length, s.name) for s in cm.streets]
    return Graph(cm.node_ids(), edges, directed=False)


@dataclass(frozen=True)
class GridMap:
    """A rectangular grid of open/blocked cells with labeled marker cells."""

    width: int
    height: int
    blocked: frozenset[tuple[int, int]]
    markers: dict[str, tuple[int, int]]

    @staticmethod
    def cell_id(x: int, y: int) -> NodeId:
        return f"{x},{y}"

    def marker_node(self, label: str) -> NodeId:
        if label not in self.markers:
            raise UnknownNode(f"no marker {label!r} on this grid")
        return self.cell_id(*self.markers[label])

    def open_cells(self):
        for y in range(self.height):
            for x in range(self.width):
                if (x, y) not in self.blocked:
                    yield x, y


def parse_grid(text: str) -> GridMap:
    """Parse an ASCII grid; rows must be equal length, markers unique."""
    rows = text.rstrip("\n").split("\n")
    if rows == [""]:
        raise ParseError("empty grid")
    width = len(rows[0])
    if width == 0:
        raise ParseError("empty grid row")
    blocked: set[tuple[int, int]] = set()
    markers: dict[str, tuple[int, int]] = {}
    for y, row in enumerate(rows):
        if len(row) != width:
            raise RaggedRows(f"row {y} has {len(row)} cells, expected {width}")
        for x, ch in enumerate(row):
            if ch == OPEN_CELL:
                continue
            if ch == BLOCKED_CELL:
                blocked.add((x, y))
            elif ch.isspace() or not ch.isprintable():
                raise ParseError(f"unexpected character {ch!r} at ({x},{y})")
            else:
                if ch in markers:
                    raise DuplicateMarker(f"marker {ch!r} appears more than once")
                markers[ch] = (x, y)
    return GridMap(width=width, height=len(rows), blocked=frozenset(blocked), markers=markers)


def format_grid(gm: GridMap, overlay: dict[tuple[int, int], str] | None = None) -> str:
    """Render a grid back to text, optionally overwriting cells (path display)."""
    marker_at = {cell: label for label, cell in gm.markers.items()}
    lines = []
    for y in range(gm.height):
        row = []
        for x in range(gm.width):
            if overlay and (x, y) in overlay:
                row.append(overlay[(x, y)])
            elif (x, y) in gm.blocked:
                row.append(BLOCKED_CELL)
            elif (x, y) in marker_at:
                row.append(marker_at[(x, y)])
            else:
                row.append(OPEN_CELL)
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def grid_to_graph(gm: GridMap) -> Graph:
    """One node per open cell, unit-cost edges between 4-adjacent open cells."""
    nodes = [GridMap.cell_id(x, y) for x, y in gm.open_cells()]
    open_set = {(x, y) for x, y in gm.open_cells()}
    edges = []
    for x, y in sorted(open_set):
        for nx, ny in ((x + 1, y), (x, y + 1)):
            if (nx, ny) in open_set:
                edges.append(Edge(GridMap.cell_id(x, y), GridMap.cell_id(nx, ny), 1.0))
    return Graph(nodes, edges, directed=False)
