"""Merging two matchings into one that tracks their convex combination.

Components:
- decompose: alternating paths and cycles of the symmetric difference
- MergeParams: delta, K and the derived constants
- simplify_pair / check_lemma_bullets: the three simplification passes
- random_merge / asymptotic_merge: component-wise sampling
- merge_expectation: per-cardinality mean of the merged weight
"""

from src.merge.decomposition import Component, ComponentDecomposition, check_matching, decompose
from src.merge.params import MergeParams
from src.merge.transformations import (
    BulletReport,
    SimplifiedPair,
    absorb_light_neighbours,
    check_lemma_bullets,
    simplify_pair,
    split_long_components,
    swap_heavy_components,
)
from src.merge.random_merge import (
    KExpectation,
    MergeOutcome,
    MergeStats,
    asymptotic_merge,
    convex_ratio,
    merge_expectation,
    random_merge,
    sample_merge,
)

__all__ = [
    "Component",
    "ComponentDecomposition",
    "check_matching",
    "decompose",
    "MergeParams",
    "BulletReport",
    "SimplifiedPair",
    "absorb_light_neighbours",
    "check_lemma_bullets",
    "simplify_pair",
    "split_long_components",
    "swap_heavy_components",
    "KExpectation",
    "MergeOutcome",
    "MergeStats",
    "asymptotic_merge",
    "convex_ratio",
    "merge_expectation",
    "random_merge",
    "sample_merge",
]
