"""Lexicographically maximal independent sets and the greedy baseline."""

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, List, Optional, Sequence, Tuple

from src.solvers.bipartite import max_weight_matching
from src.solvers.branch_and_bound import branch_and_bound
from src.solvers.optimum import SolveMethod, use_bipartite_path
from src.systems.base import ElementSet, IndependenceSystem, enumerate_independent, order_by_weight
from src.systems.graph import validate_weights
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()


@total_ordering
@dataclass(frozen=True)
class LexKey:
    """Weights of a set in decreasing order, compared lexicographically.

    When one sequence is a prefix of the other, the longer one is larger.
    """

    weights: Tuple[Number, ...]

    @classmethod
    def of(cls, items: Iterable[int], weights: Sequence[Number]) -> "LexKey":
        return cls(tuple(sorted((weights[e] for e in items), reverse=True)))

    def __lt__(self, other: "LexKey") -> bool:
        return self.weights < other.weights


def surrogate_weights(system: IndependenceSystem, weights: Sequence[Number]) -> Tuple[int, ...]:
    """Integer weights whose maximisation gives a lexicographic maximum.

    Distinct weight values get ranks ``1..d`` in increasing order and each
    element gets ``base ** rank`` with ``base = max(d, |E|) + 1``, so one
    element of a given rank outweighs any collection of lighter elements.
    Inactive elements get 0.
    """
    active = system.elements
    distinct: List[Number] = []
    for value in sorted(weights[e] for e in active):
        if not distinct or value != distinct[-1]:
            distinct.append(value)
    base = max(len(distinct), len(active)) + 1

    surrogate = [0] * system.ground_size
    for e in active:
        rank = next(idx for idx, value in enumerate(distinct, start=1) if value == weights[e])
        surrogate[e] = base**rank
    return tuple(surrogate)


def lex_max_sets(
    system: IndependenceSystem,
    weights: Sequence[Number],
    maximal: Optional[Sequence[ElementSet]] = None,
) -> List[ElementSet]:
    """Every independent set with the largest LexKey (by enumeration).

    ``maximal`` may carry the precomputed maximal sets of the system.
    """
    candidates = maximal
    if candidates is None:
        candidates = enumerate_independent(system, maximal_only=True)
    keys = [LexKey.of(s, weights) for s in candidates]
    best = max(keys)
    return [s for s, key in zip(candidates, keys) if key == best]


def lex_max(
    system: IndependenceSystem,
    weights: Sequence[Number],
    method: SolveMethod | str = SolveMethod.AUTO,
    verify: Optional[bool] = None,
) -> ElementSet:
    """An independent set whose decreasing weight sequence is lexicographically largest.

    Args:
        system: Independence system
        weights: Weight per element id
        method: Solution path for the surrogate maximisation
        verify: Re-check against enumeration when within the cap (default from settings)

    Returns:
        A lexicographically maximal independent set

    Raises:
        GuaranteeViolation: If verification finds a lexicographically larger set
    """
    settings = get_settings()
    weights = validate_weights(weights, system.ground_size)
    surrogate = surrogate_weights(system, weights)

    bipartite = use_bipartite_path(system, method)
    if bipartite:
        chosen, _ = max_weight_matching(system.graph, surrogate)
    else:
        chosen, _ = branch_and_bound(system, surrogate)

    verify = settings.lex_verify if verify is None else verify
    if verify and len(system.elements) <= settings.enumeration_cap:
        best = max(LexKey.of(s, weights) for s in enumerate_independent(system, maximal_only=True))
        if LexKey.of(chosen, weights) != best:
            raise GuaranteeViolation(
                f"lex_max returned {sorted(chosen)} but a lexicographically larger set exists"
            )

    logger.debug(f"lex_max on {system.describe()} -> {sorted(chosen)} (bipartite={bipartite})")
    return chosen


def greedy(system: IndependenceSystem, weights: Sequence[Number]) -> ElementSet:
    """Scan elements by (weight desc, id asc), keeping those that stay independent."""
    chosen: ElementSet = frozenset()
    for e in order_by_weight(system.elements, weights):
        if system.can_extend(chosen, e):
            chosen = chosen | {e}
    return chosen
