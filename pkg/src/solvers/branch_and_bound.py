"""Brute-force optimisation over independence systems.

Two engines live here: a pure enumerator that computes the full OPT
profile from every independent set, and a depth-first branch-and-bound
that finds one optimal set with at most ``k`` elements.
"""

from typing import Callable, List, Optional, Sequence, Tuple

from src.solvers.profile import OptProfile
from src.systems.base import (
    ElementSet,
    IndependenceSystem,
    enumerate_independent,
    order_by_weight,
    set_weight,
)
from src.utils.config import get_settings
from src.utils.errors import ResourceLimitError
from src.utils.logger import get_logger
from src.utils.numbers import Number, is_exact

logger = get_logger()

TieKey = Callable[[ElementSet], tuple]


def enumerated_profile(
    system: IndependenceSystem,
    weights: Sequence[Number],
    sets: Optional[Sequence[ElementSet]] = None,
) -> OptProfile:
    """OPT profile from exhaustive enumeration of independent sets.

    ``sets`` may carry a precomputed enumeration of the system.
    """
    sets = sets if sets is not None else enumerate_independent(system)
    rank = max(len(s) for s in sets)

    best_by_size: List[Optional[Tuple[Number, ElementSet]]] = [None] * (rank + 1)
    for s in sets:
        value = set_weight(s, weights)
        current = best_by_size[len(s)]
        if current is None or value > current[0]:
            best_by_size[len(s)] = (value, s)

    values: List[Number] = []
    witnesses: List[ElementSet] = []
    for size in range(rank + 1):
        value, witness = best_by_size[size]
        if values and not value > values[-1]:
            value, witness = values[-1], witnesses[-1]
        values.append(value)
        witnesses.append(witness)

    return OptProfile(tuple(values), tuple(witnesses))


def branch_and_bound(
    system: IndependenceSystem,
    weights: Sequence[Number],
    k: Optional[int] = None,
    tie_key: Optional[TieKey] = None,
    cap: Optional[int] = None,
) -> Tuple[ElementSet, Number]:
    """Maximum-weight independent set with at most ``k`` elements.

    Elements are branched on in (weight desc, id asc) order, include-branch
    first. A node is pruned when its weight plus the weight of the next
    free slots' heaviest remaining elements cannot beat the incumbent.

    Args:
        system: Independence system
        weights: Weight per element id
        k: Cardinality bound (None for unbounded)
        tie_key: Optional key; among equal-weight sets the larger key wins
        cap: Enumeration cap (default from settings)

    Returns:
        Tuple of (optimal set, its weight)

    Raises:
        ResourceLimitError: If the system exceeds the enumeration cap
    """
    settings = get_settings()
    cap = cap if cap is not None else settings.enumeration_cap
    order = order_by_weight(system.elements, weights)
    n = len(order)
    if n > cap:
        raise ResourceLimitError(
            f"{system.describe()} has {n} elements, branch-and-bound cap is {cap}"
        )

    limit = n if k is None else min(k, n)
    prefix: List[Number] = [0]
    for e in order:
        prefix.append(prefix[-1] + weights[e])
    exact = all(is_exact(weights[e]) for e in order)
    slack = 0 if exact else settings.tolerance * (1 + abs(float(prefix[-1])))

    best_set: ElementSet = frozenset()
    best_value: Number = 0
    best_key = tie_key(best_set) if tie_key else None

    def visit(pos: int, chosen: ElementSet, value: Number):
        nonlocal best_set, best_value, best_key
        if value > best_value or (
            tie_key is not None and value == best_value and tie_key(chosen) > best_key
        ):
            best_set, best_value = chosen, value
            best_key = tie_key(chosen) if tie_key else None

        if pos == n or len(chosen) == limit:
            return
        optimistic = value + (prefix[min(pos + limit - len(chosen), n)] - prefix[pos])
        if optimistic + slack < best_value:
            return
        if tie_key is None and exact and optimistic == best_value:
            return

        e = order[pos]
        if system.can_extend(chosen, e):
            visit(pos + 1, chosen | {e}, value + weights[e])
        visit(pos + 1, chosen, value)

    visit(0, frozenset(), 0)
    logger.debug(f"Branch-and-bound on {system.describe()} with k={k}: value {float(best_value):.6g}")
    return best_set, best_value
