"""Deterministic robust solutions by maximising squared weights."""

from typing import Sequence

from src.solvers.bipartite import max_weight_matching
from src.solvers.branch_and_bound import branch_and_bound
from src.solvers.optimum import SolveMethod, use_bipartite_path
from src.systems.base import ElementSet, IndependenceSystem
from src.systems.graph import validate_weights
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()


def _tie_key(items: ElementSet) -> tuple:
    # Larger cardinality first, then the lexicographically smallest sorted ids
    return (len(items), tuple(-e for e in sorted(items)))


def squared_weight_solution(
    system: IndependenceSystem,
    weights: Sequence[Number],
    method: SolveMethod | str = SolveMethod.AUTO,
) -> ElementSet:
    """Independent set maximising the sum of squared weights.

    On matchings the result is ``1/sqrt(2)``-robust. Ties prefer larger
    cardinality, then the lexicographically smallest id sequence; on the
    bipartite path ties are resolved toward the largest optimal cardinality
    reached by the augmentation sequence.
    """
    weights = validate_weights(weights, system.ground_size)
    squares = tuple(w * w for w in weights)
    if use_bipartite_path(system, method):
        chosen, _ = max_weight_matching(system.graph, squares, prefer_larger=True)
    else:
        chosen, _ = branch_and_bound(system, squares, tie_key=_tie_key)
    logger.debug(f"Squared-weight solution on {system.describe()}: {sorted(chosen)}")
    return chosen
