"""Paths and cycles of the symmetric difference of two matchings."""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx

from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError


@dataclass(frozen=True)
class Component:
    """A maximal alternating path or cycle, edges listed in walk order."""

    edges: Tuple[int, ...]
    is_cycle: bool
    first_side: Tuple[int, ...] = ()
    second_side: Tuple[int, ...] = ()

    @property
    def edge_set(self) -> FrozenSet[int]:
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass
class ComponentDecomposition:
    """``M & M'`` plus the components of ``M ^ M'`` ordered by smallest edge id."""

    components: List[Component] = field(default_factory=list)
    common: FrozenSet[int] = frozenset()

    def to_dict(self):
        return {
            "components": [
                {"edges": list(c.edges), "cycle": c.is_cycle} for c in self.components
            ],
            "common": sorted(self.common),
        }


def check_matching(
    graph: WeightedGraph, items: Iterable[int], name: str = "edge set"
) -> FrozenSet[int]:
    """Return ``items`` as a frozenset, or raise InputError if it is not a matching."""
    items = frozenset(items)
    if not MatchingSystem(graph).is_independent(items):
        raise InputError(f"The {name} {sorted(items)} is not a matching")
    return items


def _walk(graph: WeightedGraph, sub: nx.Graph, vertices: set) -> Component:
    edge_ids = {sub.edges[u, v]["id"] for u, v in sub.subgraph(vertices).edges}
    ends = [v for v in vertices if sub.degree(v) == 1]
    if ends:
        # Start at the end whose edge has the smaller id
        start = min(ends, key=lambda v: next(iter(sub.edges(v, data="id")))[2])
        is_cycle = False
    else:
        first = min(edge_ids)
        start = graph.edges[first][0]
        is_cycle = True

    order: List[int] = []
    used = set()
    vertex = start
    if is_cycle:
        order.append(first)
        used.add(first)
        vertex = graph.other_end(first, start)
    while len(order) < len(edge_ids):
        step = next(
            data for _, _, data in sub.edges(vertex, data="id") if data not in used
        )
        order.append(step)
        used.add(step)
        vertex = graph.other_end(step, vertex)
    return Component(tuple(order), is_cycle)


def decompose(
    first: Iterable[int],
    second: Iterable[int],
    graph: WeightedGraph,
) -> ComponentDecomposition:
    """Split ``first ^ second`` into maximal alternating paths and cycles.

    Args:
        first: Matching M (edge ids)
        second: Matching M' (edge ids)
        graph: Graph both matchings live in

    Returns:
        ComponentDecomposition; path walks start at the end with the smaller
        edge id and cycle walks start at the smallest edge id

    Raises:
        InputError: If either edge set is not a matching
    """
    first = check_matching(graph, first, "first matching")
    second = check_matching(graph, second, "second matching")

    sub = nx.Graph()
    for e in first ^ second:
        u, v = graph.edges[e]
        sub.add_edge(u, v, id=e)

    components = []
    for vertices in nx.connected_components(sub):
        walk = _walk(graph, sub, set(vertices))
        components.append(
            Component(
                walk.edges,
                walk.is_cycle,
                tuple(e for e in walk.edges if e in first),
                tuple(e for e in walk.edges if e in second),
            )
        )
    components.sort(key=lambda c: min(c.edges))
    return ComponentDecomposition(components, first & second)
