"""Cardinality-constrained optimum and OPT profiles with path selection."""

from enum import Enum
from typing import Sequence, Tuple

from src.solvers.bipartite import bipartite_profile, successive_matchings
from src.solvers.branch_and_bound import branch_and_bound, enumerated_profile
from src.solvers.profile import OptProfile
from src.systems.base import ElementSet, IndependenceSystem
from src.systems.families import MatchingSystem
from src.systems.graph import validate_weights
from src.utils.config import get_settings
from src.utils.errors import InputError, ResourceLimitError
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()


class SolveMethod(Enum):
    """How to compute optima."""
    AUTO = "auto"  # Enumerate within the cap, bipartite path beyond it
    ENUMERATE = "enumerate"
    BIPARTITE = "bipartite"


def use_bipartite_path(system: IndependenceSystem, method: SolveMethod | str = SolveMethod.AUTO) -> bool:
    """Decide between the enumeration path and the bipartite matching path.

    Raises:
        InputError: If the bipartite path is forced on an unsuitable system
        ResourceLimitError: If neither path applies
    """
    method = SolveMethod(method)
    if method is SolveMethod.ENUMERATE:
        return False
    if method is SolveMethod.BIPARTITE:
        if not isinstance(system, MatchingSystem):
            raise InputError(f"Bipartite path needs a matching system, got {system.describe()}")
        if not system.graph.is_bipartite():
            raise InputError("Bipartite path needs a bipartite graph")
        return True

    if len(system.elements) <= get_settings().enumeration_cap:
        return False
    if isinstance(system, MatchingSystem) and system.graph.is_bipartite():
        return True
    raise ResourceLimitError(
        f"{system.describe()} exceeds the enumeration cap and has no polynomial path"
    )


def max_weight_at_most_k(
    system: IndependenceSystem,
    weights: Sequence[Number],
    k: int,
    method: SolveMethod | str = SolveMethod.AUTO,
) -> Tuple[ElementSet, Number]:
    """Maximum-weight independent set with at most ``k`` elements.

    Args:
        system: Independence system
        weights: Weight per element id
        k: Cardinality bound
        method: Solution path

    Returns:
        Tuple of (set, OPT_k)
    """
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    weights = validate_weights(weights, system.ground_size)

    if use_bipartite_path(system, method):
        best: Tuple[ElementSet, Number] = (frozenset(), 0)
        for size, (matching, value) in enumerate(successive_matchings(system.graph, weights)):
            if size > k:
                break
            if value > best[1]:
                best = (matching, value)
        return best

    return branch_and_bound(system, weights, k)


def opt_profile(
    system: IndependenceSystem,
    weights: Sequence[Number],
    method: SolveMethod | str = SolveMethod.AUTO,
) -> OptProfile:
    """OPT profile ``OPT_0..OPT_r`` with witnesses."""
    weights = validate_weights(weights, system.ground_size)
    if use_bipartite_path(system, method):
        profile = bipartite_profile(system.graph, weights)
    else:
        profile = enumerated_profile(system, weights)
    logger.debug(f"OPT profile of {system.describe()}: rank {profile.rank}")
    return profile
