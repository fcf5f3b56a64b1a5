"""Weighted simple graphs."""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from src.utils.errors import InputError
from src.utils.numbers import Number


def validate_weights(weights: Sequence[Number], size: int) -> Tuple[Number, ...]:
    """Check a weighting against a ground set of ``size`` elements.

    Raises:
        InputError: On length mismatch, negative or non-finite weights.
    """
    weights = tuple(weights)
    if len(weights) != size:
        raise InputError(f"Expected {size} weights, got {len(weights)}")
    for idx, weight in enumerate(weights):
        if isinstance(weight, float) and not math.isfinite(weight):
            raise InputError(f"Weight of element {idx} is not finite: {weight}")
        if weight < 0:
            raise InputError(f"Weight of element {idx} is negative: {weight}")
    return weights


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph whose edge ids double as element ids."""

    n_vertices: int
    edges: Tuple[Tuple[int, int], ...]
    weights: Tuple[Number, ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n_vertices < 0:
            raise InputError(f"Negative vertex count: {self.n_vertices}")
        seen = set()
        for idx, (u, v) in enumerate(edges):
            if u == v:
                raise InputError(f"Edge {idx} is a loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InputError(f"Edge {idx} = ({u}, {v}) leaves vertex range 0..{self.n_vertices - 1}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise InputError(f"Duplicate edge {pair}")
            seen.add(pair)
        object.__setattr__(self, "weights", validate_weights(self.weights, len(edges)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> Dict[int, List[int]]:
        """Vertex -> ids of incident edges, in increasing id order."""
        incident: Dict[int, List[int]] = {v: [] for v in range(self.n_vertices)}
        for idx, (u, v) in enumerate(self.edges):
            incident[u].append(idx)
            incident[v].append(idx)
        return incident

    def other_end(self, edge: int, vertex: int) -> int:
        u, v = self.edges[edge]
        return v if vertex == u else u

    def with_weights(self, weights: Sequence[Number]) -> "WeightedGraph":
        return WeightedGraph(self.n_vertices, self.edges, tuple(weights))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_vertices))
        for idx, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, id=idx, weight=self.weights[idx])
        return graph

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def bipartition(self) -> Tuple[List[int], List[int]]:
        """Split vertices into two colour classes by 2-colouring.

        Raises:
            InputError: If the graph is not bipartite.
        """
        graph = self.to_networkx()
        if not nx.is_bipartite(graph):
            raise InputError("Graph is not bipartite")
        colouring = nx.bipartite.color(graph)
        left = sorted(v for v, side in colouring.items() if side == 0)
        right = sorted(v for v, side in colouring.items() if side == 1)
        return left, right
