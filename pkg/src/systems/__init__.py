"""Ground sets, graphs and independence systems.

Components:
- WeightedGraph: simple undirected graph with non-negative edge weights
- IndependenceSystem: oracle interface with matching, b-matching,
  matroid-intersection and explicit families
- Minor views (deletion, contraction, truncation)
- make_system: factory keyed by system kind
"""

from src.systems.graph import WeightedGraph, validate_weights
from src.systems.base import (
    IndependenceSystem,
    is_independent,
    enumerate_independent,
    top_k,
    order_by_weight,
    set_weight,
    prefix_weights,
    max_independent_size,
)
from src.systems.families import (
    MatchingSystem,
    BMatchingSystem,
    Matroid,
    UniformMatroid,
    PartitionMatroid,
    MatroidIntersection,
    ExplicitSystem,
)
from src.systems.minors import DeletionMinor, ContractionMinor, TruncationMinor
from src.systems.factory import SystemKind, make_system

__all__ = [
    "WeightedGraph",
    "validate_weights",
    "IndependenceSystem",
    "is_independent",
    "enumerate_independent",
    "top_k",
    "order_by_weight",
    "set_weight",
    "prefix_weights",
    "max_independent_size",
    "MatchingSystem",
    "BMatchingSystem",
    "Matroid",
    "UniformMatroid",
    "PartitionMatroid",
    "MatroidIntersection",
    "ExplicitSystem",
    "DeletionMinor",
    "ContractionMinor",
    "TruncationMinor",
    "SystemKind",
    "make_system",
]
