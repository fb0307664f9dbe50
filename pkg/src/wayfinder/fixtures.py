"""Registry of the fixture maps shipped inside the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .graph import Graph, parse_edge_list
from .mapkit import city_to_graph, parse_city_map

_DESCRIPTIONS = {
    "fig2": ("edges", "Six-node demo network used by the workbench walkthrough."),
    "citymap": ("citymap", "Small city map with named streets between home, school, and shops."),
    "disconnected": ("edges", "Two components, for unreachable-destination behavior."),
    "market": ("grid", "Supermarket floor grid with blocked aisles."),
}

_FILENAMES = {
    "fig2": "fig2.edges",
    "citymap": "citymap.json",
    "disconnected": "disconnected.edges",
    "market": "market.grid",
}


def _read(filename: str) -> str:
    return resources.files("wayfinder").joinpath("data", filename).read_text(encoding="utf-8")


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    content: str
    layout: dict[str, list[int]] | None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "description": self.description,
            "content": self.content,
            "layout": self.layout,
        }


def fixture_names() -> list[str]:
    return sorted(_FILENAMES)


def load_fixture(name: str) -> Fixture:
    if name not in _FILENAMES:
        raise KeyError(f"no fixture named {name!r}")
    kind, description = _DESCRIPTIONS[name]
    layouts = json.loads(_read("layouts.json"))
    return Fixture(
        name=name,
        kind=kind,
        description=description,
        content=_read(_FILENAMES[name]),
        layout=layouts.get(name),
    )


def all_fixtures() -> list[Fixture]:
    return [load_fixture(name) for name in fixture_names()]


def fixture_graph(name: str) -> Graph:
    """The fixture parsed into a Graph (edge-list and city-map fixtures only)."""
    fx = load_fixture(name)
    if fx.kind == "edges":
        return parse_edge_list(fx.content)
    if fx.kind == "citymap":
        return city_to_graph(parse_city_map(fx.content))
    raise ValueError(f"fixture {name!r} is not a graph fixture")
