"""Randomized power-of-two rounding.

For a threshold ``x`` in ``[0, 1]`` every weight is rounded down to
``2 ** floor(log2(w_e) - x)``. As ``x`` sweeps the unit interval the rounded
weighting only changes where ``x`` crosses a fractional part of some
``log2(w_e)``, so a lexicographic maximum per interval between consecutive
breakpoints, weighted by the interval length, describes the whole
distribution. It is ``1/ln 4``-robust on good systems.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.robust.solution import RandomizedSolution
from src.solvers.lexicographic import lex_max
from src.solvers.optimum import SolveMethod
from src.systems.base import IndependenceSystem
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph, validate_weights
from src.systems.minors import DeletionMinor
from src.utils.config import get_settings
from src.utils.errors import InputError
from src.utils.logger import get_logger
from src.utils.numbers import Number, power_of_two, split_log2

logger = get_logger()

# element id -> (floor of log2, fractional part)
LogSplit = Dict[int, Tuple[int, Fraction]]


def _check_threshold(x) -> None:
    if not 0 <= x <= 1:
        raise InputError(f"Threshold must lie in [0, 1], got {x}")


def _bit_exponent(q: int, frac: Fraction, x) -> int:
    # floor(q + frac - x) for frac in [0, 1) and x in [0, 1]
    return q if x <= frac else q - 1


def rounded_weights(weights: Sequence[Number], x) -> Tuple[Number, ...]:
    """The bit-function ``w^[x]_e = 2 ** floor(log2(w_e) - x)``.

    Args:
        weights: Positive weights
        x: Threshold in [0, 1]

    Returns:
        Exact powers of two (int or Fraction)

    Raises:
        InputError: If some weight is not positive or x is out of range
    """
    _check_threshold(x)
    bits = get_settings().interval_precision_bits
    rounded = []
    for idx, weight in enumerate(weights):
        if not weight > 0:
            raise InputError(f"Weight of element {idx} must be positive, got {weight}")
        q, frac, _ = split_log2(weight, bits)
        rounded.append(power_of_two(_bit_exponent(q, frac, x)))
    return tuple(rounded)


def _log_splits(
    weights: Sequence[Number],
    elements: Sequence[int],
    resolution: Optional[int],
) -> Tuple[LogSplit, bool]:
    bits = get_settings().interval_precision_bits
    splits: LogSplit = {}
    exact = True
    for e in elements:
        q, frac, is_exact = split_log2(weights[e], bits)
        exact = exact and is_exact
        if resolution:
            frac = Fraction(int(frac * resolution), resolution)
        splits[e] = (q, frac)
    return splits, exact


def _restrict_positive(
    system: IndependenceSystem,
    positive: List[int],
) -> Tuple[IndependenceSystem, List[int]]:
    """Drop zero-weight elements; returns the smaller system and its id map."""
    if len(positive) == len(system.elements):
        return system, list(range(system.ground_size))
    if isinstance(system, MatchingSystem):
        # Rebuild the graph so large bipartite instances keep the polynomial path
        graph = system.graph
        sub = WeightedGraph(
            graph.n_vertices,
            tuple(graph.edges[e] for e in positive),
            tuple(graph.weights[e] for e in positive),
        )
        return MatchingSystem(sub), positive
    keep = set(positive)
    zero = [e for e in system.elements if e not in keep]
    return DeletionMinor(system, zero), list(range(system.ground_size))


def randomized_robust(
    system: IndependenceSystem,
    weights: Sequence[Number],
    resolution: Optional[int] = None,
    method: SolveMethod | str = SolveMethod.AUTO,
) -> RandomizedSolution:
    """Distribution over lexicographic maxima of the rounded weightings.

    Args:
        system: Independence system (the robustness bound needs a good system)
        weights: Non-negative weights; zero-weight elements are never chosen
        resolution: When set to ``L``, log-weights are first rounded down to
            multiples of ``1/L`` so at most ``L`` support sets appear
        method: Solution path for the lexicographic maximisations

    Returns:
        Distribution with support size at most (number of breakpoints + 1)

    Raises:
        InputError: If all weights are zero or the resolution is not positive
    """
    weights = validate_weights(weights, system.ground_size)
    if resolution is not None and resolution < 1:
        raise InputError(f"Resolution must be a positive integer, got {resolution}")
    positive = [e for e in system.elements if weights[e] > 0]
    if not positive:
        raise InputError("All weights are zero")

    splits, exact = _log_splits(weights, positive, resolution)
    restricted, id_map = _restrict_positive(system, positive)
    local_of = {orig: idx for idx, orig in enumerate(id_map)}

    breakpoints = sorted({Fraction(0), Fraction(1)} | {frac for _, frac in splits.values()})
    logger.info(
        f"Rounding {len(positive)} positive weights: {len(breakpoints) - 1} intervals "
        f"(exact logarithms: {exact})"
    )

    pairs = []
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        x = (lo + hi) / 2
        local_weights: List[Number] = [0] * restricted.ground_size
        for e, (q, frac) in splits.items():
            local_weights[local_of[e]] = power_of_two(_bit_exponent(q, frac, x))
        chosen = lex_max(restricted, local_weights, method=method)
        pairs.append((frozenset(id_map[e] for e in chosen), hi - lo))

    solution = RandomizedSolution.from_pairs(pairs)
    logger.debug(f"Randomized solution has {len(solution.support)} support sets")
    return solution
