"""Deletion, contraction and truncation views of an independence system.

Views keep the element ids of the wrapped system; removed or contracted
elements simply drop out of ``elements`` and are never independent.
"""

from typing import Iterable, Tuple

from src.systems.base import ElementSet, IndependenceSystem
from src.utils.errors import InputError


class DeletionMinor(IndependenceSystem):
    """``I \\ X``: independent sets avoiding ``X``."""

    kind = "deletion"

    def __init__(self, base: IndependenceSystem, removed: Iterable[int]):
        super().__init__(base.ground_size)
        self.base = base
        self.removed = frozenset(removed)
        for e in self.removed:
            if not 0 <= e < base.ground_size:
                raise InputError(f"Cannot delete unknown element {e}")

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(e for e in self.base.elements if e not in self.removed)

    def _is_independent(self, items: ElementSet) -> bool:
        return not (items & self.removed) and self.base._is_independent(items)

    def can_extend(self, items: ElementSet, element: int) -> bool:
        return element not in self.removed and self.base.can_extend(items, element)

    def describe(self) -> str:
        return f"{self.base.describe()} \\ {sorted(self.removed)}"


class ContractionMinor(IndependenceSystem):
    """``I / X``: sets ``S`` disjoint from ``X`` with ``S | X`` independent."""

    kind = "contraction"

    def __init__(self, base: IndependenceSystem, contracted: Iterable[int]):
        super().__init__(base.ground_size)
        contracted = frozenset(contracted)
        if not base.is_independent(contracted):
            raise InputError(f"Cannot contract dependent set {sorted(contracted)}")
        inactive = set(range(base.ground_size)) - set(base.elements)
        if contracted & inactive:
            raise InputError(f"Cannot contract removed elements {sorted(contracted & inactive)}")
        self.base = base
        self.contracted = contracted

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(e for e in self.base.elements if e not in self.contracted)

    def _is_independent(self, items: ElementSet) -> bool:
        return not (items & self.contracted) and self.base._is_independent(items | self.contracted)

    def can_extend(self, items: ElementSet, element: int) -> bool:
        return element not in self.contracted and self.base.can_extend(
            items | self.contracted, element
        )

    def describe(self) -> str:
        return f"{self.base.describe()} / {sorted(self.contracted)}"


class TruncationMinor(IndependenceSystem):
    """``I_k``: independent sets with at most ``k`` elements."""

    kind = "truncation"

    def __init__(self, base: IndependenceSystem, k: int):
        super().__init__(base.ground_size)
        if k < 0:
            raise InputError(f"Truncation level must be non-negative, got {k}")
        self.base = base
        self.k = k

    @property
    def elements(self) -> Tuple[int, ...]:
        return self.base.elements

    def _is_independent(self, items: ElementSet) -> bool:
        return len(items) <= self.k and self.base._is_independent(items)

    def can_extend(self, items: ElementSet, element: int) -> bool:
        return len(items) < self.k and self.base.can_extend(items, element)

    def describe(self) -> str:
        return f"{self.base.describe()}_{self.k}"
