"""Factory for independence systems keyed by kind."""

from enum import Enum
from typing import Any

from src.systems.base import IndependenceSystem
from src.systems.families import (
    BMatchingSystem,
    ExplicitSystem,
    MatchingSystem,
    MatroidIntersection,
)
from src.utils.errors import InputError


class SystemKind(Enum):
    """Supported system families."""
    MATCHING = "matching"
    B_MATCHING = "b_matching"
    MATROID_INTERSECTION = "matroid_intersection"
    EXPLICIT = "explicit"


def make_system(kind: SystemKind | str, **params: Any) -> IndependenceSystem:
    """Build a system from keyword parameters.

    Args:
        kind: System family
        **params: ``graph`` for matchings; ``graph`` and ``capacities`` for
            b-matchings; ``first`` and ``second`` matroids for intersections;
            ``ground_size`` and ``bases`` for explicit systems

    Returns:
        The independence system

    Raises:
        InputError: On unknown kinds or missing/malformed parameters
    """
    try:
        kind = SystemKind(kind)
    except ValueError:
        raise InputError(f"Unknown system kind: {kind}")

    try:
        if kind is SystemKind.MATCHING:
            return MatchingSystem(params["graph"])
        if kind is SystemKind.B_MATCHING:
            return BMatchingSystem(params["graph"], params["capacities"])
        if kind is SystemKind.MATROID_INTERSECTION:
            return MatroidIntersection(params["first"], params["second"])
        return ExplicitSystem(params["ground_size"], params["bases"], params.get("labels"))
    except KeyError as e:
        raise InputError(f"Missing parameter {e} for system kind '{kind.value}'")
