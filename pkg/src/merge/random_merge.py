"""Component-wise random merge of two matchings.

Every sample keeps the common edges and, independently per component of
the symmetric difference, takes the first matching's side with probability
``mu`` and the second's otherwise. The sample that best tracks the convex
combination ``mu w(M_k) + (1 - mu) w(M'_k)`` over ``k >= K`` is returned.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.merge.decomposition import ComponentDecomposition, check_matching, decompose
from src.merge.params import MergeParams
from src.merge.transformations import BulletReport, simplify_pair
from src.systems.base import prefix_weights, top_k
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph, validate_weights
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation, InputError
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()


@dataclass
class MergeStats:
    """Summary of a batch of random merges."""
    samples: int
    components: int
    best_ratio: float
    mean_ratio: float
    distinct: int
    ratios: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "samples": self.samples,
            "components": self.components,
            "best_ratio": self.best_ratio,
            "mean_ratio": self.mean_ratio,
            "distinct": self.distinct,
        }


def sample_merge(
    decomposition: ComponentDecomposition,
    mu: float,
    rng: np.random.Generator,
) -> FrozenSet[int]:
    """One merged edge set drawn from a decomposition of ``(M, M')``."""
    picks = rng.random(len(decomposition.components)) < mu
    chosen = set(decomposition.common)
    for component, take_first in zip(decomposition.components, picks):
        side = component.first_side if take_first else component.second_side
        chosen.update(side)
    return frozenset(chosen)


def convex_ratio(
    merged: Iterable[int],
    first: Iterable[int],
    second: Iterable[int],
    weights: Sequence[Number],
    mu: float,
    min_k: int,
) -> float:
    """``min over k >= min_k`` of ``w(M*_k) / (mu w(M_k) + (1 - mu) w(M'_k))``.

    Cardinalities where the combination is zero are skipped; 1.0 when none remain.
    """
    merged_sums = [float(v) for v in prefix_weights(merged, weights)]
    first_sums = [float(v) for v in prefix_weights(first, weights)]
    second_sums = [float(v) for v in prefix_weights(second, weights)]
    top = max(len(first_sums), len(second_sums)) - 1

    def at(sums: List[float], k: int) -> float:
        return sums[min(k, len(sums) - 1)]

    ratios = []
    for k in range(min_k, top + 1):
        target = mu * at(first_sums, k) + (1 - mu) * at(second_sums, k)
        if target > 0:
            ratios.append(at(merged_sums, k) / target)
    return min(ratios, default=1.0)


def random_merge(
    first: Iterable[int],
    second: Iterable[int],
    graph: WeightedGraph,
    mu: float,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    min_k: int = 1,
    weights: Optional[Sequence[Number]] = None,
) -> Tuple[FrozenSet[int], MergeStats]:
    """Sample component-wise merges and keep the best one.

    Args:
        first: Matching M_bar
        second: Matching M_bar'
        graph: Graph of both matchings
        mu: Probability of taking the first matching's side of a component
        samples: Number of samples (default from settings)
        seed: Random seed (default from settings)
        min_k: Smallest cardinality that counts (the K of the asymptotic ratio)
        weights: Edge weights (default: the graph's own)

    Returns:
        Tuple of (best merged matching, MergeStats)

    Raises:
        InputError: If mu is outside [0, 1] or an input is not a matching
        GuaranteeViolation: If a sample is not a matching
    """
    settings = get_settings()
    if not 0 <= mu <= 1:
        raise InputError(f"mu must lie in [0, 1], got {mu}")
    samples = samples if samples is not None else settings.merge_samples
    seed = seed if seed is not None else settings.default_seed
    if samples < 1:
        raise InputError(f"samples must be positive, got {samples}")
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    first = check_matching(graph, first, "first matching")
    second = check_matching(graph, second, "second matching")

    decomposition = decompose(first, second, graph)
    system = MatchingSystem(graph)
    rng = np.random.default_rng(seed)

    best: Optional[Tuple[float, FrozenSet[int]]] = None
    ratios: List[float] = []
    seen = set()
    for _ in range(samples):
        merged = sample_merge(decomposition, mu, rng)
        if not system.is_independent(merged):
            raise GuaranteeViolation(f"Merged set {sorted(merged)} is not a matching")
        ratio = convex_ratio(merged, first, second, weights, mu, min_k)
        ratios.append(ratio)
        seen.add(merged)
        if best is None or ratio > best[0]:
            best = (ratio, merged)

    stats = MergeStats(
        samples=samples,
        components=len(decomposition.components),
        best_ratio=best[0],
        mean_ratio=float(np.mean(ratios)),
        distinct=len(seen),
        ratios=ratios,
    )
    logger.info(
        f"Random merge over {stats.components} components: best ratio {stats.best_ratio:.6f} "
        f"from {samples} samples ({stats.distinct} distinct)"
    )
    return best[1], stats


@dataclass
class KExpectation:
    """Empirical against exact mean of ``W*_k = w(M* ∩ (M_k ∪ M'_k))`` at one ``k``."""
    k: int
    mean: float
    std: float
    expected: float
    convex: float
    samples: int

    @property
    def band(self) -> float:
        return 3 * self.std / np.sqrt(self.samples)

    @property
    def within_band(self) -> bool:
        return abs(self.mean - self.expected) <= self.band + 1e-9

    @property
    def dominates_convex(self) -> bool:
        return self.expected >= self.convex - 1e-9

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "mean": self.mean,
            "expected": self.expected,
            "convex": self.convex,
            "band": self.band,
            "within_band": self.within_band,
        }


def merge_expectation(
    first: Iterable[int],
    second: Iterable[int],
    graph: WeightedGraph,
    mu: float,
    samples: int = 10_000,
    seed: Optional[int] = None,
    ks: Optional[Sequence[int]] = None,
    weights: Optional[Sequence[Number]] = None,
) -> List[KExpectation]:
    """Per-cardinality mean of ``W*_k`` over sampled merges.

    A component's first side meets ``M_k ∪ M'_k`` exactly in ``M_k`` (and
    its second side in ``M'_k``), so ``E[W*_k]`` is the common weight inside
    ``M_k ∪ M'_k`` plus ``mu w(M_k \\ common) + (1 - mu) w(M'_k \\ common)``.
    This equals ``W_k = mu w(M_k) + (1 - mu) w(M'_k)`` whenever the common
    edges sit in both prefixes or in neither, and exceeds it otherwise.

    Args:
        first: Matching M_bar
        second: Matching M_bar'
        graph: Graph of both matchings
        mu: Probability of taking the first matching's side of a component
        samples: Number of merged samples
        seed: Random seed (default from settings)
        ks: Cardinalities to evaluate (default ``1 .. max(|M|, |M'|)``)
        weights: Edge weights (default: the graph's own)

    Returns:
        One KExpectation per requested ``k``
    """
    if not 0 <= mu <= 1:
        raise InputError(f"mu must lie in [0, 1], got {mu}")
    if samples < 2:
        raise InputError(f"samples must be at least 2, got {samples}")
    seed = seed if seed is not None else get_settings().default_seed
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    first = check_matching(graph, first, "first matching")
    second = check_matching(graph, second, "second matching")
    ks = list(ks) if ks is not None else list(range(1, max(len(first), len(second)) + 1))
    if any(k < 1 for k in ks):
        raise InputError(f"cardinalities must be positive, got {ks}")

    decomposition = decompose(first, second, graph)
    rng = np.random.default_rng(seed)
    draws = [sample_merge(decomposition, mu, rng) for _ in range(samples)]
    floats = [float(w) for w in weights]

    results = []
    for k in ks:
        first_k, second_k = top_k(first, weights, k), top_k(second, weights, k)
        union = first_k | second_k
        values = np.array([sum(floats[e] for e in merged & union) for merged in draws])
        common = decomposition.common & union
        expected = (
            sum(floats[e] for e in common)
            + mu * sum(floats[e] for e in first_k - common)
            + (1 - mu) * sum(floats[e] for e in second_k - common)
        )
        convex = mu * sum(floats[e] for e in first_k) + (1 - mu) * sum(floats[e] for e in second_k)
        results.append(
            KExpectation(k, float(values.mean()), float(values.std()), expected, convex, samples)
        )
    misses = sum(not r.within_band for r in results)
    logger.debug(f"Merge expectation over {len(ks)} cardinalities: {misses} outside the 3-sigma band")
    return results


@dataclass
class MergeOutcome:
    """Simplification plus random merge, measured against the original pair."""
    params: MergeParams
    matching: FrozenSet[int]
    bullets: BulletReport
    stats: MergeStats
    best_ratio: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta": float(self.params.delta),
            "K": self.params.K,
            "bullets_hold": self.bullets.holds,
            "best_ratio": self.best_ratio,
            "samples": self.stats.samples,
            "matching": sorted(self.matching),
            "simplified_ratio": self.stats.best_ratio,
            "components": self.stats.components,
        }


def asymptotic_merge(
    first: Iterable[int],
    second: Iterable[int],
    graph: WeightedGraph,
    mu: float,
    params: MergeParams,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    weights: Optional[Sequence[Number]] = None,
    strict: bool = True,
) -> MergeOutcome:
    """Simplify ``(M, M')``, merge at random, and score against the original pair.

    ``best_ratio`` compares the chosen matching with
    ``mu w(M_k) + (1 - mu) w(M'_k)`` for the original matchings and ``k >= K``.
    """
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    first = check_matching(graph, first, "first matching")
    second = check_matching(graph, second, "second matching")
    simplified = simplify_pair(first, second, graph, params, weights=weights, strict=strict)
    merged, stats = random_merge(
        simplified.first,
        simplified.second,
        graph,
        mu,
        samples=samples,
        seed=seed,
        min_k=params.K,
        weights=weights,
    )
    ratio = convex_ratio(merged, first, second, weights, mu, params.K)
    return MergeOutcome(params, merged, simplified.bullets, stats, ratio)
