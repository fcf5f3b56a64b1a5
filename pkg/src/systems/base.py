"""Independence-system interface and set helpers shared by all solvers."""

from abc import ABC, abstractmethod
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.utils.config import get_settings
from src.utils.errors import InputError, ResourceLimitError
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()

ElementSet = FrozenSet[int]


class IndependenceSystem(ABC):
    """Downward-closed family of subsets of ``{0, ..., ground_size - 1}``.

    Subclasses implement ``_is_independent`` for already-validated sets.
    ``elements`` lists the ids that may appear in independent sets; minors
    shrink it while keeping ids stable.
    """

    kind: str = "system"

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise InputError(f"Negative ground size: {ground_size}")
        self.ground_size = ground_size

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(range(self.ground_size))

    @abstractmethod
    def _is_independent(self, items: ElementSet) -> bool:
        """Independence test for a set of valid element ids."""

    def is_independent(self, items: Iterable[int]) -> bool:
        items = frozenset(items)
        for e in items:
            if not 0 <= e < self.ground_size:
                raise InputError(f"Element id {e} out of range 0..{self.ground_size - 1}")
        return self._is_independent(items)

    def can_extend(self, items: ElementSet, element: int) -> bool:
        """Whether ``items | {element}`` is independent, given ``items`` is."""
        return self._is_independent(items | {element})

    def describe(self) -> str:
        return f"{self.kind}(|E|={self.ground_size})"

    def __repr__(self) -> str:
        return self.describe()


def is_independent(system: IndependenceSystem, items: Iterable[int]) -> bool:
    """Oracle query; raises InputError for out-of-range ids."""
    return system.is_independent(items)


def enumerate_independent(
    system: IndependenceSystem,
    maximal_only: bool = False,
    cap: Optional[int] = None,
) -> List[ElementSet]:
    """List every independent set (or every maximal one).

    Sets are grown in increasing id order; downward closure guarantees every
    independent set is reached through its sorted prefixes.

    Args:
        system: System to enumerate
        maximal_only: Return only inclusion-wise maximal sets
        cap: Largest admissible number of active elements (default from settings)

    Returns:
        Duplicate-free list sorted by (size, sorted ids)

    Raises:
        ResourceLimitError: If the system has more active elements than the cap
    """
    cap = cap if cap is not None else get_settings().enumeration_cap
    elements = system.elements
    if len(elements) > cap:
        raise ResourceLimitError(
            f"{system.describe()} has {len(elements)} elements, enumeration cap is {cap}"
        )

    found: List[ElementSet] = []

    def grow(current: ElementSet, start: int):
        found.append(current)
        for pos in range(start, len(elements)):
            e = elements[pos]
            if system.can_extend(current, e):
                grow(current | {e}, pos + 1)

    grow(frozenset(), 0)

    if maximal_only:
        found = [
            s for s in found if not any(e not in s and system.can_extend(s, e) for e in elements)
        ]

    found.sort(key=lambda s: (len(s), sorted(s)))
    logger.debug(f"Enumerated {len(found)} sets of {system.describe()} (maximal_only={maximal_only})")
    return found


def order_by_weight(items: Iterable[int], weights: Sequence[Number]) -> List[int]:
    """Sort ids by weight descending, ties by id ascending."""
    return sorted(items, key=lambda e: (-weights[e], e))


def top_k(items: Iterable[int], weights: Sequence[Number], k: int) -> ElementSet:
    """The ``k`` heaviest elements of ``items`` (ties go to the smaller id)."""
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    return frozenset(order_by_weight(items, weights)[:k])


def set_weight(items: Iterable[int], weights: Sequence[Number]) -> Number:
    total: Number = 0
    for e in items:
        total = total + weights[e]
    return total


def prefix_weights(items: Iterable[int], weights: Sequence[Number]) -> List[Number]:
    """``[w(S_0), w(S_1), ..., w(S_|S|)]`` for the fixed tie-break order."""
    sums: List[Number] = [0]
    for e in order_by_weight(items, weights):
        sums.append(sums[-1] + weights[e])
    return sums


def max_independent_size(system: IndependenceSystem) -> int:
    """Largest independent-set cardinality (by enumeration)."""
    return max(len(s) for s in enumerate_independent(system))
