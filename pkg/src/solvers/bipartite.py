"""Weighted bipartite matchings by successive shortest augmenting paths.

Starting from the empty matching, each round augments along the alternating
path of largest gain (gain = weight of added edges minus weight of removed
edges), found with a queue-based Bellman-Ford over the residual graph. Each
intermediate matching is a maximum-weight matching of its cardinality, so the
sequence yields the whole OPT profile. Works for any exact or float weights,
including the big-integer surrogates of the lexicographic solver.
"""

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from src.solvers.profile import OptProfile
from src.systems.base import ElementSet, set_weight
from src.systems.graph import WeightedGraph, validate_weights
from src.utils.errors import GuaranteeViolation
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()


def _best_augmenting_path(
    graph: WeightedGraph,
    weights: Sequence[Number],
    left: List[int],
    is_left: set,
    mate: Dict[int, int],
) -> Optional[Tuple[Number, List[int]]]:
    dist: Dict[int, Number] = {}
    pred: Dict[int, int] = {}
    queue = deque(v for v in left if v not in mate)
    for v in queue:
        dist[v] = 0
    queued = set(queue)
    budget = (graph.n_vertices + 1) * (graph.num_edges + 1)

    while queue:
        x = queue.popleft()
        queued.discard(x)
        budget -= 1
        if budget < 0:
            raise GuaranteeViolation("Negative cycle in residual graph of an extreme matching")

        if x in is_left:
            steps = [(e, -weights[e]) for e in graph.incidence[x] if mate.get(x) != e]
        elif x in mate:
            steps = [(mate[x], weights[mate[x]])]
        else:
            continue

        for e, cost in steps:
            y = graph.other_end(e, x)
            candidate = dist[x] + cost
            if y not in dist or candidate < dist[y]:
                dist[y] = candidate
                pred[y] = e
                if y not in queued:
                    queue.append(y)
                    queued.add(y)

    targets = [v for v in dist if v not in is_left and v not in mate]
    if not targets:
        return None
    target = min(targets, key=lambda v: (dist[v], v))

    path: List[int] = []
    v = target
    while v in pred:
        e = pred[v]
        path.append(e)
        v = graph.other_end(e, v)
    return -dist[target], path


def successive_matchings(
    graph: WeightedGraph,
    weights: Optional[Sequence[Number]] = None,
) -> List[Tuple[ElementSet, Number]]:
    """Maximum-weight matchings of every cardinality ``0..nu``.

    Args:
        graph: Bipartite graph
        weights: Edge weights (default: the graph's own)

    Returns:
        List whose entry ``k`` is ``(matching, weight)`` for the best matching
        with exactly ``k`` edges; ``nu`` is the maximum matching size

    Raises:
        InputError: If the graph is not bipartite
    """
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    left, _ = graph.bipartition()
    is_left = set(left)

    matching: set = set()
    mate: Dict[int, int] = {}
    results: List[Tuple[ElementSet, Number]] = [(frozenset(), 0)]

    while True:
        found = _best_augmenting_path(graph, weights, left, is_left, mate)
        if found is None:
            break
        _, path = found
        matching.symmetric_difference_update(path)
        mate = {}
        for e in matching:
            u, v = graph.edges[e]
            mate[u] = e
            mate[v] = e
        current = frozenset(matching)
        results.append((current, set_weight(current, weights)))

    logger.debug(f"Successive matchings on {graph.num_edges} edges reached size {len(results) - 1}")
    return results


def bipartite_profile(
    graph: WeightedGraph,
    weights: Optional[Sequence[Number]] = None,
) -> OptProfile:
    """OPT profile of the matching system of a bipartite graph in polynomial time.

    Raises:
        InputError: If the graph is not bipartite
    """
    values: List[Number] = []
    witnesses: List[ElementSet] = []
    for matching, value in successive_matchings(graph, weights):
        if values and not value > values[-1]:
            matching, value = witnesses[-1], values[-1]
        values.append(value)
        witnesses.append(matching)
    return OptProfile(tuple(values), tuple(witnesses))


def max_weight_matching(
    graph: WeightedGraph,
    weights: Optional[Sequence[Number]] = None,
    prefer_larger: bool = True,
) -> Tuple[ElementSet, Number]:
    """Maximum-weight matching of a bipartite graph.

    Args:
        graph: Bipartite graph
        weights: Edge weights (default: the graph's own)
        prefer_larger: Among equal weights return the larger matching

    Returns:
        Tuple of (matching, weight)
    """
    best: Tuple[ElementSet, Number] = (frozenset(), 0)
    for matching, value in successive_matchings(graph, weights):
        if value > best[1] or (prefer_larger and value == best[1]):
            best = (matching, value)
    return best
