"""OPT profiles: best weight achievable with at most k elements, for every k."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from src.systems.base import ElementSet
from src.utils.errors import InputError
from src.utils.numbers import Number, is_exact


@dataclass(frozen=True)
class OptProfile:
    """Values ``OPT_0..OPT_r`` with one witnessing set per entry.

    ``r`` is the largest independent-set size; values stay constant beyond it.
    """

    values: Tuple[Number, ...]
    witnesses: Tuple[ElementSet, ...]

    @property
    def rank(self) -> int:
        return len(self.values) - 1

    def value(self, k: int) -> Number:
        if k < 0:
            raise InputError(f"k must be non-negative, got {k}")
        return self.values[min(k, self.rank)]

    def witness(self, k: int) -> ElementSet:
        if k < 0:
            raise InputError(f"k must be non-negative, got {k}")
        return self.witnesses[min(k, self.rank)]

    def concavity_violation(self, tolerance: float = 0.0) -> Optional[int]:
        """First ``k`` with ``OPT_k + OPT_{k+2} > 2 * OPT_{k+1}``, or None."""
        for k in range(self.rank - 1):
            lhs = self.values[k] + self.values[k + 2]
            rhs = 2 * self.values[k + 1]
            exact = is_exact(lhs) and is_exact(rhs)
            if (lhs > rhs) if exact else (lhs > rhs + tolerance):
                return k
        return None

    def is_concave(self, tolerance: float = 0.0) -> bool:
        return self.concavity_violation(tolerance) is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "opt": [float(v) for v in self.values],
            "witnesses": [sorted(w) for w in self.witnesses],
        }
