"""Constants of the pair-simplification step."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from src.utils.config import get_settings
from src.utils.errors import InputError

Real = Union[int, float, Fraction]


def _as_fraction(value: Real) -> Fraction:
    # Decimal literals such as 0.3 are read as the decimal they print as
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class MergeParams:
    """``delta`` and ``K`` plus the derived constants.

    ``d1 = 18/delta + 3`` and ``d3 = 6/delta + 2`` are exact fractions.
    ``d2 = d1 ** (d1 + 4)`` is an int when ``d1`` is integral and the result
    fits ``bit_budget`` bits, a float when it is finite, and ``math.inf``
    otherwise.
    """

    delta: Fraction
    K: int
    bit_budget: int

    @classmethod
    def create(cls, delta: Real, K: int, bit_budget: Optional[int] = None) -> "MergeParams":
        """Validate and build parameters.

        Raises:
            InputError: If delta is outside (0, 1) or K < 1
        """
        delta = _as_fraction(delta)
        if not 0 < delta < 1:
            raise InputError(f"delta must lie in (0, 1), got {float(delta)}")
        if K < 1:
            raise InputError(f"K must be at least 1, got {K}")
        budget = bit_budget if bit_budget is not None else get_settings().d2_bit_budget
        return cls(delta, int(K), budget)

    @property
    def d1(self) -> Fraction:
        return 18 / self.delta + 3

    @property
    def d3(self) -> Fraction:
        return 6 / self.delta + 2

    @property
    def delta_prime(self) -> Fraction:
        return self.delta / 3

    @property
    def neighbour_ratio(self) -> Fraction:
        """``delta' / (1 + delta')``: lightest admissible neighbour relative to an edge."""
        return self.delta_prime / (1 + self.delta_prime)

    @property
    def d2(self) -> Union[int, float]:
        d1 = self.d1
        if d1.denominator == 1:
            base = d1.numerator
            if (base + 4) * math.log2(base) <= self.bit_budget:
                return base ** (base + 4)
            return math.inf
        try:
            return float(d1) ** (float(d1) + 4)
        except OverflowError:
            return math.inf

    @property
    def beta(self) -> float:
        return float(self.neighbour_ratio) ** float(self.d1)

    @property
    def gamma(self) -> float:
        return self.beta / float(self.d1 * self.d3)

    @property
    def subpath_length(self) -> int:
        """``ceil(2 / delta')``."""
        return math.ceil(2 / self.delta_prime)

    def to_dict(self) -> Dict[str, Any]:
        d2 = self.d2
        return {
            "delta": float(self.delta),
            "K": self.K,
            "D1": float(self.d1),
            "D2_finite": d2 != math.inf,
            "D2_log2": math.log2(d2) if d2 != math.inf else None,
            "D3": float(self.d3),
            "delta_prime": float(self.delta_prime),
            "beta": self.beta,
            "gamma": self.gamma,
        }
