"""Simplifying a pair of matchings before merging them.

Three passes run in order:

1. Light neighbours. Edges of the symmetric difference are visited by
   non-increasing weight. An edge at least as heavy as its (at most two)
   neighbours together replaces them in the other matching; otherwise a
   neighbour lighter than ``delta'/(1+delta')`` times the edge is dropped.
2. Long components. Components longer than ``D1`` are cut into subpaths of
   ``ceil(2/delta')`` edges (plus a shorter head) and the lightest edge of
   every full subpath is dropped.
3. Heavy components. While some component carries more than a
   ``1/(gamma K)`` share of either top-K weight, it is copied into the
   matching that holds its lighter side.

Afterwards both matchings keep a ``1 - delta`` share of their top-k
weights for every ``k >= K``, components are short and light, and the
two top-k weights stay within a factor ``D3`` of each other.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from src.merge.decomposition import check_matching, decompose
from src.merge.params import MergeParams
from src.systems.base import order_by_weight, prefix_weights, set_weight
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph, validate_weights
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation
from src.utils.logger import get_logger
from src.utils.numbers import Number, is_exact

logger = get_logger()


@dataclass
class BulletReport:
    """Postconditions of the simplification, checked for every ``k >= K``."""
    weight_retained: bool = True
    components_small: bool = True
    balanced: bool = True
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.weight_retained and self.components_small and self.balanced

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "weight_retained": self.weight_retained,
            "components_small": self.components_small,
            "balanced": self.balanced,
            "violations": self.violations,
        }


@dataclass
class SimplifiedPair:
    first: FrozenSet[int]
    second: FrozenSet[int]
    bullets: BulletReport
    operations: Dict[str, int] = field(default_factory=dict)


def _at_least(lhs: Number, rhs: Number, tolerance: float) -> bool:
    if is_exact(lhs) and is_exact(rhs):
        return lhs >= rhs
    return float(lhs) >= float(rhs) - tolerance * (1 + abs(float(rhs)))


def _top_weight(items: Iterable[int], weights: Sequence[Number], k: int) -> Number:
    sums = prefix_weights(items, weights)
    return sums[min(k, len(sums) - 1)]


def absorb_light_neighbours(
    graph: WeightedGraph,
    weights: Sequence[Number],
    first: Set[int],
    second: Set[int],
    params: MergeParams,
    counts: Counter,
) -> None:
    """First pass, in place on ``first`` and ``second``."""
    sides = (first, second)
    for e in order_by_weight(first ^ second, weights):
        if (e in first) == (e in second):
            continue
        other = sides[1] if e in first else sides[0]
        u, v = graph.edges[e]
        neighbours = sorted(
            (f for f in graph.incidence[u] + graph.incidence[v] if f in other),
            key=lambda f: (weights[f], f),
        )
        light = neighbours[0] if len(neighbours) == 2 else None
        light_weight = weights[light] if light is not None else 0
        total: Number = 0
        for f in neighbours:
            total = total + weights[f]

        if weights[e] >= total:
            other.difference_update(neighbours)
            other.add(e)
            counts["absorbed"] += 1
        elif light is not None and light_weight <= params.neighbour_ratio * weights[e]:
            other.discard(light)
            counts["dropped_light"] += 1


def split_long_components(
    graph: WeightedGraph,
    weights: Sequence[Number],
    first: Set[int],
    second: Set[int],
    params: MergeParams,
    counts: Counter,
) -> None:
    """Second pass, in place on ``first`` and ``second``.

    The head subpath holds the first ``|C| mod L`` edges of the walk; ties
    for the lightest edge of a subpath go to the smallest id.
    """
    length = params.subpath_length
    for component in decompose(first, second, graph).components:
        if len(component) <= params.d1:
            continue
        head = len(component) % length
        for start in range(head, len(component), length):
            chunk = component.edges[start : start + length]
            victim = min(chunk, key=lambda e: (weights[e], e))
            (first if victim in first else second).discard(victim)
            counts["split"] += 1


def swap_heavy_components(
    graph: WeightedGraph,
    weights: Sequence[Number],
    first: Set[int],
    second: Set[int],
    params: MergeParams,
    counts: Counter,
) -> None:
    """Third pass, in place; top-K weights are recomputed after every swap."""
    scale = params.gamma * params.K
    if scale == 0:
        return
    while True:
        top_first = frozenset(order_by_weight(first, weights)[: params.K])
        top_second = frozenset(order_by_weight(second, weights)[: params.K])
        budget_first = float(set_weight(top_first, weights))
        budget_second = float(set_weight(top_second, weights))

        heavy = None
        for component in decompose(first, second, graph).components:
            edges = component.edge_set
            share_first = float(set_weight(edges & top_first, weights))
            share_second = float(set_weight(edges & top_second, weights))
            if scale * share_first > budget_first or scale * share_second > budget_second:
                heavy = edges
                break
        if heavy is None:
            return

        if set_weight(heavy & first, weights) >= set_weight(heavy & second, weights):
            second.symmetric_difference_update(heavy)
        else:
            first.symmetric_difference_update(heavy)
        counts["swapped"] += 1


def check_lemma_bullets(
    graph: WeightedGraph,
    weights: Sequence[Number],
    original: Tuple[Iterable[int], Iterable[int]],
    simplified: Tuple[Iterable[int], Iterable[int]],
    params: MergeParams,
    tolerance: Optional[float] = None,
) -> BulletReport:
    """Check the three postconditions of the simplification.

    Args:
        graph: Graph of both matchings
        weights: Edge weights
        original: ``(M, M')`` before simplification
        simplified: ``(M_bar, M_bar')`` after simplification
        params: Merge constants
        tolerance: Relative slack for float weights (default from settings)

    Returns:
        BulletReport listing every violated inequality
    """
    tol = tolerance if tolerance is not None else get_settings().tolerance
    weights = validate_weights(weights, graph.num_edges)
    first, second = (frozenset(m) for m in original)
    bar_first, bar_second = (frozenset(m) for m in simplified)
    report = BulletReport()
    keep = 1 - params.delta
    d3 = params.d3
    top = max(len(first), len(second), len(bar_first), len(bar_second), params.K)

    for k in range(params.K, top + 1):
        for name, before, after in (("M", first, bar_first), ("M'", second, bar_second)):
            old, new = _top_weight(before, weights, k), _top_weight(after, weights, k)
            if not _at_least(new, keep * old, tol):
                report.weight_retained = False
                report.violations.append(
                    f"k={k}: w({name}_bar_k)={float(new):.6g} < (1-delta) {float(old):.6g}"
                )

        a, b = _top_weight(bar_first, weights, k), _top_weight(bar_second, weights, k)
        if not (_at_least(d3 * a, b, tol) and _at_least(b * d3, a, tol)):
            report.balanced = False
            report.violations.append(
                f"k={k}: top weights {float(a):.6g} and {float(b):.6g} differ by more than D3"
            )

    d2 = params.d2
    floor = min(
        _top_weight(bar_first, weights, params.K),
        _top_weight(bar_second, weights, params.K),
    )
    for component in decompose(bar_first, bar_second, graph).components:
        if len(component) > params.d1:
            report.components_small = False
            report.violations.append(f"Component {list(component.edges)} has more than D1 edges")
        if d2 == math.inf:
            continue
        heft = set_weight(component.edges, weights)
        try:
            fits = _at_least(d2 * floor, heft * params.K, tol)
        except OverflowError:
            fits = True
        if not fits:
            report.components_small = False
            report.violations.append(
                f"Component {list(component.edges)} weighs more than D2/K of the top-K weight"
            )
    return report


def simplify_pair(
    first: Iterable[int],
    second: Iterable[int],
    graph: WeightedGraph,
    params: MergeParams,
    weights: Optional[Sequence[Number]] = None,
    strict: bool = True,
) -> SimplifiedPair:
    """Run the three passes and check their postconditions.

    Args:
        first: Matching M
        second: Matching M'
        graph: Graph of both matchings
        params: Merge constants (delta, K)
        weights: Edge weights (default: the graph's own)
        strict: Raise on a failed postcondition instead of only reporting it

    Returns:
        SimplifiedPair with both matchings, the bullet report and pass counters

    Raises:
        InputError: If an input is not a matching
        GuaranteeViolation: If strict and a postcondition fails
    """
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    first = check_matching(graph, first, "first matching")
    second = check_matching(graph, second, "second matching")

    bar_first, bar_second = set(first), set(second)
    counts: Counter = Counter()
    absorb_light_neighbours(graph, weights, bar_first, bar_second, params, counts)
    split_long_components(graph, weights, bar_first, bar_second, params, counts)
    swap_heavy_components(graph, weights, bar_first, bar_second, params, counts)

    system = MatchingSystem(graph)
    if not (system.is_independent(bar_first) and system.is_independent(bar_second)):
        raise GuaranteeViolation("Simplification produced a non-matching")

    bullets = check_lemma_bullets(
        graph, weights, (first, second), (bar_first, bar_second), params
    )
    logger.info(
        f"Simplified pair (delta={float(params.delta)}, K={params.K}): {dict(counts)}, "
        f"bullets hold: {bullets.holds}"
    )
    if strict and not bullets.holds:
        raise GuaranteeViolation("; ".join(bullets.violations))
    return SimplifiedPair(frozenset(bar_first), frozenset(bar_second), bullets, dict(counts))
