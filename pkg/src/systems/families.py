"""Concrete independence-system families."""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.systems.base import ElementSet, IndependenceSystem
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError


class MatchingSystem(IndependenceSystem):
    """Matchings of a graph: no vertex is covered twice."""

    kind = "matching"

    def __init__(self, graph: WeightedGraph):
        super().__init__(graph.num_edges)
        self.graph = graph

    def _is_independent(self, items: ElementSet) -> bool:
        covered = set()
        for e in items:
            u, v = self.graph.edges[e]
            if u in covered or v in covered:
                return False
            covered.add(u)
            covered.add(v)
        return True

    def can_extend(self, items: ElementSet, element: int) -> bool:
        u, v = self.graph.edges[element]
        for e in items:
            if e == element or u in self.graph.edges[e] or v in self.graph.edges[e]:
                return False
        return True

    def describe(self) -> str:
        return f"matching(n={self.graph.n_vertices}, m={self.graph.num_edges})"


class BMatchingSystem(IndependenceSystem):
    """Edge sets ``F`` with ``deg_F(v) <= b_v`` for every vertex."""

    kind = "b_matching"

    def __init__(self, graph: WeightedGraph, capacities: Sequence[int]):
        super().__init__(graph.num_edges)
        capacities = tuple(int(b) for b in capacities)
        if len(capacities) != graph.n_vertices:
            raise InputError(
                f"Expected {graph.n_vertices} vertex capacities, got {len(capacities)}"
            )
        if any(b < 0 for b in capacities):
            raise InputError("Vertex capacities must be non-negative")
        self.graph = graph
        self.capacities = capacities

    def _is_independent(self, items: ElementSet) -> bool:
        degree: Dict[int, int] = {}
        for e in items:
            for v in self.graph.edges[e]:
                degree[v] = degree.get(v, 0) + 1
                if degree[v] > self.capacities[v]:
                    return False
        return True

    def describe(self) -> str:
        return f"b_matching(n={self.graph.n_vertices}, m={self.graph.num_edges})"


class Matroid(IndependenceSystem):
    """Marker base for matroids (independence oracles satisfying exchange)."""

    kind = "matroid"


class UniformMatroid(Matroid):
    """All sets of size at most ``rank``."""

    kind = "uniform"

    def __init__(self, ground_size: int, rank: int):
        super().__init__(ground_size)
        if rank < 0:
            raise InputError(f"Negative matroid rank: {rank}")
        self.rank = rank

    def _is_independent(self, items: ElementSet) -> bool:
        return len(items) <= self.rank

    def describe(self) -> str:
        return f"uniform(|E|={self.ground_size}, r={self.rank})"


class PartitionMatroid(Matroid):
    """At most ``capacities[i]`` elements from each block ``blocks[i]``.

    Blocks must partition the ground set.
    """

    kind = "partition"

    def __init__(self, ground_size: int, blocks: Sequence[Iterable[int]], capacities: Sequence[int]):
        super().__init__(ground_size)
        blocks = tuple(tuple(sorted(block)) for block in blocks)
        capacities = tuple(int(c) for c in capacities)
        if len(blocks) != len(capacities):
            raise InputError("Partition matroid needs one capacity per block")
        if any(c < 0 for c in capacities):
            raise InputError("Block capacities must be non-negative")
        members = [e for block in blocks for e in block]
        if sorted(members) != list(range(ground_size)):
            raise InputError("Partition blocks must cover every element exactly once")
        self.blocks = blocks
        self.capacities = capacities
        self._block_of = {e: idx for idx, block in enumerate(blocks) for e in block}

    def _is_independent(self, items: ElementSet) -> bool:
        used: Dict[int, int] = {}
        for e in items:
            block = self._block_of[e]
            used[block] = used.get(block, 0) + 1
            if used[block] > self.capacities[block]:
                return False
        return True

    def describe(self) -> str:
        return f"partition(|E|={self.ground_size}, blocks={len(self.blocks)})"


class MatroidIntersection(IndependenceSystem):
    """Sets independent in both matroids."""

    kind = "matroid_intersection"

    def __init__(self, first: Matroid, second: Matroid):
        if first.ground_size != second.ground_size:
            raise InputError(
                f"Matroids live on different ground sets: {first.ground_size} vs {second.ground_size}"
            )
        super().__init__(first.ground_size)
        self.first = first
        self.second = second

    def _is_independent(self, items: ElementSet) -> bool:
        return self.first._is_independent(items) and self.second._is_independent(items)

    def describe(self) -> str:
        return f"intersection({self.first.describe()}, {self.second.describe()})"


class ExplicitSystem(IndependenceSystem):
    """System given by its bases; a set is independent iff some base contains it."""

    kind = "explicit"

    def __init__(
        self,
        ground_size: int,
        bases: Sequence[Iterable[int]],
        labels: Optional[Sequence[str]] = None,
    ):
        super().__init__(ground_size)
        frozen: List[ElementSet] = []
        for base in bases:
            base = frozenset(base)
            for e in base:
                if not 0 <= e < ground_size:
                    raise InputError(f"Base element {e} out of range 0..{ground_size - 1}")
            if base not in frozen:
                frozen.append(base)
        for a in frozen:
            for b in frozen:
                if a is not b and a < b:
                    raise InputError(f"Base {sorted(a)} is contained in base {sorted(b)}")
        if labels is not None and len(labels) != ground_size:
            raise InputError("Need one label per element")
        self.bases: Tuple[ElementSet, ...] = tuple(frozen) if frozen else (frozenset(),)
        self.labels = tuple(labels) if labels is not None else None

    def _is_independent(self, items: ElementSet) -> bool:
        return any(items <= base for base in self.bases)

    def describe(self) -> str:
        return f"explicit(|E|={self.ground_size}, bases={len(self.bases)})"
