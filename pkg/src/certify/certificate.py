"""Dual certificates bounding OPT_k by sqrt(2) times the top-k squared-weight matching.

The cardinality-k matching LP has dual variables ``z`` (for the cardinality
bound) and ``y_v`` (one per vertex). From the optimal squared-weight dual the
construction below produces a feasible ``(z*, y*)`` whose value equals
``sqrt(2) * w(M_k)``, so ``OPT_k <= sqrt(2) * w(M_k)`` by weak duality.
Weights are scaled so that the cheapest edge of ``M_k`` weighs one.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.certify.dual import MatchingDual, squared_matching_dual
from src.solvers.optimum import opt_profile
from src.systems.base import order_by_weight, set_weight, top_k
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph, validate_weights
from src.utils.config import get_settings
from src.utils.errors import InputError
from src.utils.logger import get_logger
from src.utils.numbers import Number

logger = get_logger()

SQRT2 = math.sqrt(2)


@dataclass(frozen=True)
class DualCertificate:
    """Feasible dual of the cardinality-k matching LP in scaled units."""

    k: int
    z_star: float
    y_star: Tuple[float, ...]
    scale: float
    edges: Tuple[int, ...]


@dataclass
class CertificateCheck:
    """Outcome of re-checking a certificate against every edge."""
    k: int
    feasible: bool
    value: float  # k * z* + sum(y*), scaled units
    target: float  # sqrt(2) * w'(M_k), scaled units
    bound_holds: bool
    scale: float
    violated_edges: List[int] = field(default_factory=list)

    @property
    def unscaled_value(self) -> float:
        return self.value * self.scale


def _check_matching(graph: WeightedGraph, matching: Iterable[int]) -> frozenset:
    matching = frozenset(matching)
    if not MatchingSystem(graph).is_independent(matching):
        raise InputError(f"Edge set {sorted(matching)} is not a matching")
    return matching


def build_certificate(
    graph: WeightedGraph,
    weights: Sequence[Number],
    matching: Iterable[int],
    dual: MatchingDual,
    k: int,
) -> DualCertificate:
    """Construct ``(z*, y*)`` for cardinality ``k``.

    Args:
        graph: Bipartite graph
        weights: Edge weights
        matching: Squared-weight optimal matching M
        dual: Complementary-slack optimal dual for M
        k: Cardinality, ``1 <= k <= |M|``

    Returns:
        DualCertificate in units where the cheapest edge of ``M_k`` weighs one

    Raises:
        InputError: If k is out of range or ``M_k`` contains a zero-weight edge
    """
    weights = validate_weights(weights, graph.num_edges)
    matching = _check_matching(graph, matching)
    if not 1 <= k <= len(matching):
        raise InputError(f"k must lie in 1..{len(matching)}, got {k}")

    top = top_k(matching, weights, k)
    scale = float(min(weights[e] for e in top))
    if not scale > 0:
        raise InputError(f"M_{k} contains a zero-weight edge; the certificate cannot be scaled")

    y = [value / scale for value in dual.y]
    y_star = [0.0] * graph.n_vertices
    for e in top:
        u, v = graph.edges[e]
        scaled = float(weights[e]) / scale
        high, low = (u, v) if y[u] >= y[v] else (v, u)
        if y[low] < 1 / SQRT2:
            y_star[low] = 0.0
            y_star[high] = SQRT2 * (scaled - 1)
        else:
            total = y[u] + y[v]
            y_star[high] = SQRT2 * (scaled * y[high] / total - 0.5)
            y_star[low] = SQRT2 * (scaled * y[low] / total - 0.5)

    return DualCertificate(
        k=k,
        z_star=SQRT2,
        y_star=tuple(max(0.0, value) for value in y_star),
        scale=scale,
        edges=tuple(order_by_weight(top, weights)),
    )


def verify_certificate(
    graph: WeightedGraph,
    weights: Sequence[Number],
    matching: Iterable[int],
    certificate: DualCertificate,
    tolerance: Optional[float] = None,
) -> CertificateCheck:
    """Check dual feasibility on every edge and the value identity."""
    tol = tolerance if tolerance is not None else get_settings().tolerance
    weights = validate_weights(weights, graph.num_edges)
    matching = frozenset(matching)
    scale = certificate.scale
    z, y_star = certificate.z_star, certificate.y_star

    violated = []
    for idx, (u, v) in enumerate(graph.edges):
        if z + y_star[u] + y_star[v] < float(weights[idx]) / scale - tol:
            violated.append(idx)

    top = top_k(matching, weights, certificate.k)
    target = SQRT2 * float(set_weight(top, weights)) / scale
    value = certificate.k * z + sum(y_star)
    matches = abs(value - target) <= tol * (1 + abs(target))
    return CertificateCheck(
        k=certificate.k,
        feasible=not violated,
        value=value,
        target=target,
        bound_holds=not violated and matches,
        scale=scale,
        violated_edges=violated,
    )


def certify_all(graph: WeightedGraph, weights: Optional[Sequence[Number]] = None) -> List[Dict[str, Any]]:
    """Certificate records for every k with a positive-weight ``M_k``.

    ``ratio_bound`` is ``w(M_k) / OPT_k``, which a valid certificate proves
    to be at least ``1/sqrt(2)``.
    """
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    matching, dual = squared_matching_dual(graph, weights)
    profile = opt_profile(MatchingSystem(graph), weights)
    ordered = order_by_weight(matching, weights)

    records = []
    for k in range(1, len(matching) + 1):
        if not weights[ordered[k - 1]] > 0:
            logger.warning(f"Skipping k={k}: M_k contains a zero-weight edge")
            continue
        certificate = build_certificate(graph, weights, matching, dual, k)
        check = verify_certificate(graph, weights, matching, certificate)
        w_mk = float(set_weight(ordered[:k], weights))
        opt_k = float(profile.value(k))
        records.append(
            {
                "k": k,
                "feasible": check.feasible,
                "bound_holds": check.bound_holds,
                "value": check.unscaled_value,
                "wMk": w_mk,
                "optk": opt_k,
                "ratio_bound": w_mk / opt_k if opt_k else 1.0,
            }
        )
    logger.info(f"Certified {len(records)} cardinalities for a {len(matching)}-edge matching")
    return records
