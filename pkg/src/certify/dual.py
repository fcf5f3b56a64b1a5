"""Optimal duals of the squared-weight bipartite matching LP."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from src.game.simplex import Constraint, LPStatus, Sense, SimplexSolver
from src.robust.squared import squared_weight_solution
from src.systems.base import ElementSet, set_weight
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph, validate_weights
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation
from src.utils.logger import get_logger
from src.utils.numbers import Number, is_exact

logger = get_logger()


@dataclass(frozen=True)
class MatchingDual:
    """Vertex potentials ``y_v**2`` of the dual of the squared-weight matching LP."""

    squares: Tuple[Number, ...]

    @property
    def y(self) -> Tuple[float, ...]:
        return tuple(math.sqrt(max(0.0, float(s))) for s in self.squares)

    def total(self) -> Number:
        value: Number = 0
        for s in self.squares:
            value = value + s
        return value


def squared_matching_dual(
    graph: WeightedGraph,
    weights: Optional[Sequence[Number]] = None,
    tolerance: Optional[float] = None,
) -> Tuple[ElementSet, MatchingDual]:
    """Squared-weight optimal matching together with an optimal dual.

    The dual ``min sum_v s_v`` subject to ``s_u + s_v >= w_uv**2`` is solved
    with the simplex engine (exactly when the weights are exact); feasibility,
    strong duality and complementary slackness are then asserted.

    Raises:
        InputError: If the graph is not bipartite
        GuaranteeViolation: If the dual fails one of the asserted conditions
    """
    weights = graph.weights if weights is None else validate_weights(weights, graph.num_edges)
    tol = tolerance if tolerance is not None else get_settings().tolerance
    graph.bipartition()

    matching = squared_weight_solution(MatchingSystem(graph), weights)
    squares = [w * w for w in weights]
    exact = all(is_exact(s) for s in squares)

    constraints = []
    for idx, (u, v) in enumerate(graph.edges):
        row = [0] * graph.n_vertices
        row[u] = row[v] = 1
        constraints.append(Constraint(row, Sense.GE, squares[idx]))
    result = SimplexSolver(exact=exact, tolerance=tol).maximize([-1] * graph.n_vertices, constraints)
    if result.status is not LPStatus.OPTIMAL:
        raise GuaranteeViolation(f"Matching dual LP ended {result.status.value}")
    dual = MatchingDual(result.x)

    def close(a: Number, b: Number) -> bool:
        return a == b if exact else abs(float(a) - float(b)) <= tol * (1 + abs(float(b)))

    primal_value = set_weight(matching, squares)
    if not close(dual.total(), primal_value):
        raise GuaranteeViolation(
            f"Dual value {float(dual.total())} differs from matching value {float(primal_value)}"
        )
    for idx, (u, v) in enumerate(graph.edges):
        slack = dual.squares[u] + dual.squares[v] - squares[idx]
        if (slack < 0) if exact else float(slack) < -tol:
            raise GuaranteeViolation(f"Dual infeasible at edge {idx}")
        if idx in matching and not close(dual.squares[u] + dual.squares[v], squares[idx]):
            raise GuaranteeViolation(f"Complementary slackness fails at matched edge {idx}")

    logger.debug(f"Squared matching {sorted(matching)} with dual value {float(dual.total()):.6g}")
    return matching, dual
