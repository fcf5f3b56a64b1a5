"""Priority objectives: expected top-k weight for a known distribution of k."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.robust.solution import RandomizedSolution
from src.systems.base import ElementSet, IndependenceSystem, enumerate_independent, prefix_weights
from src.utils.config import get_settings
from src.utils.errors import InputError
from src.utils.numbers import Number, div, is_exact


@dataclass(frozen=True)
class PriorityDistribution:
    """Probability ``mu_k`` for each cardinality ``k >= 1`` (finite support)."""

    mu: Tuple[Tuple[int, Number], ...]

    def __post_init__(self):
        merged: Dict[int, Number] = {}
        for k, p in self.mu:
            k = int(k)
            if k < 1:
                raise InputError(f"Cardinalities start at 1, got {k}")
            if p < 0:
                raise InputError(f"Negative probability {p} for k={k}")
            merged[k] = merged.get(k, 0) + p
        entries = tuple(sorted((k, p) for k, p in merged.items() if p != 0))
        if not entries:
            raise InputError("Priority distribution has no mass")
        total = sum(p for _, p in entries)
        if all(is_exact(p) for _, p in entries):
            if total != 1:
                raise InputError(f"Priority probabilities sum to {total}, not 1")
        elif abs(float(total) - 1) > get_settings().tolerance:
            raise InputError(f"Priority probabilities sum to {float(total)}, not 1")
        object.__setattr__(self, "mu", entries)

    @classmethod
    def from_mapping(cls, mu: Mapping[int, Number]) -> "PriorityDistribution":
        return cls(tuple(mu.items()))

    @classmethod
    def point_mass(cls, k: int) -> "PriorityDistribution":
        return cls(((k, 1),))

    @property
    def max_k(self) -> int:
        return self.mu[-1][0]

    def probability(self, k: int) -> Number:
        return dict(self.mu).get(k, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {"mu": [{"k": k, "p": float(p)} for k, p in self.mu]}


def priority_value(items: Iterable[int], weights: Sequence[Number], mu: PriorityDistribution) -> Number:
    """``sum_k mu_k * w(S_k)``."""
    sums = prefix_weights(items, weights)
    total: Number = 0
    for k, p in mu.mu:
        total = total + p * sums[min(k, len(sums) - 1)]
    return total


def priority_best_in_support(
    solution: RandomizedSolution,
    weights: Sequence[Number],
    mu: PriorityDistribution,
) -> ElementSet:
    """Support set with the largest priority value (first one on ties)."""
    if not solution.support:
        raise InputError("Distribution has empty support")
    best: Optional[Tuple[Number, ElementSet]] = None
    for items, _ in solution.support:
        value = priority_value(items, weights, mu)
        if best is None or value > best[0]:
            best = (value, items)
    return best[1]


def priority_optimum(
    system: IndependenceSystem,
    weights: Sequence[Number],
    mu: PriorityDistribution,
) -> Tuple[ElementSet, Number]:
    """Brute-force maximum priority value.

    The objective is monotone under inclusion, so only maximal sets are scanned.
    """
    best: Optional[Tuple[Number, ElementSet]] = None
    for items in enumerate_independent(system, maximal_only=True):
        value = priority_value(items, weights, mu)
        if best is None or value > best[0]:
            best = (value, items)
    return best[1], best[0]


def priorities_to_mu(priorities: Sequence[Number]) -> Tuple[PriorityDistribution, Number]:
    """Turn priority coefficients ``c_1 >= c_2 >= ... >= 0`` into ``(mu, c_1)``.

    ``c_1 * sum_k mu_k * w(S_k)`` equals ``sum_k c_k * w(s_k)`` where ``s_k``
    is the k-th heaviest element.

    Raises:
        InputError: If the sequence increases, is negative, or ``c_1 <= 0``
    """
    c = list(priorities)
    if not c or not c[0] > 0:
        raise InputError("The first priority must be positive")
    for idx in range(len(c)):
        if c[idx] < 0:
            raise InputError(f"Priority c_{idx + 1} is negative")
        if idx and c[idx] > c[idx - 1]:
            raise InputError(f"Priorities increase at position {idx + 1}")
    c.append(0)
    mu = {k: div(c[k - 1] - c[k], c[0]) for k in range(1, len(c))}
    return PriorityDistribution.from_mapping(mu), c[0]


def mu_to_priorities(mu: PriorityDistribution, length: Optional[int] = None) -> Tuple[Number, ...]:
    """``c_k = sum_{i >= k} mu_i`` for ``k = 1..max(length, max support)``."""
    size = max(mu.max_k, length or 0)
    priorities = []
    for k in range(1, size + 1):
        tail: Number = 0
        for i, p in mu.mu:
            if i >= k:
                tail = tail + p
        priorities.append(tail)
    return tuple(priorities)


def random_priority_distribution(max_k: int, rng: np.random.Generator) -> PriorityDistribution:
    """Random exact distribution over ``1..max_k``; roughly a third are point masses."""
    if max_k < 1:
        raise InputError(f"max_k must be positive, got {max_k}")
    if rng.random() < 1 / 3:
        return PriorityDistribution.point_mass(int(rng.integers(1, max_k + 1)))
    counts = rng.integers(0, 10, size=max_k)
    if counts.sum() == 0:
        counts[int(rng.integers(0, max_k))] = 1
    total = int(counts.sum())
    return PriorityDistribution.from_mapping(
        {k: Fraction(int(c), total) for k, c in enumerate(counts, start=1) if c}
    )
