"""The robustness game between a solution player and a cardinality player.

Alice picks an independent set S, Bob picks a cardinality k, and Alice
receives ``w(S_k) / OPT_k``. The value of the game is the best robustness
any randomized solution can guarantee. Both players' optimal mixed
strategies come from a pair of dual linear programs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.game.simplex import Constraint, LPStatus, Sense, SimplexSolver
from src.robust.priority import PriorityDistribution
from src.robust.solution import RandomizedSolution
from src.solvers.optimum import opt_profile
from src.solvers.profile import OptProfile
from src.systems.base import ElementSet, IndependenceSystem, enumerate_independent, prefix_weights
from src.systems.graph import validate_weights
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation, InputError
from src.utils.logger import get_logger
from src.utils.numbers import Number, div, is_exact, normalize

logger = get_logger()


@dataclass(frozen=True)
class GameMatrix:
    """Payoffs ``w(S_k) / OPT_k`` for rows S and columns k."""

    rows: Tuple[ElementSet, ...]
    cols: Tuple[int, ...]
    payoff: Tuple[Tuple[Number, ...], ...]
    profile: OptProfile

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for row in self.payoff for v in row)

    def restrict(self, min_k: int) -> "GameMatrix":
        """Keep only the columns with ``k >= min_k``."""
        keep = [j for j, k in enumerate(self.cols) if k >= min_k]
        return GameMatrix(
            self.rows,
            tuple(self.cols[j] for j in keep),
            tuple(tuple(row[j] for j in keep) for row in self.payoff),
            self.profile,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": [sorted(s) for s in self.rows],
            "cols": list(self.cols),
            "payoff": [[float(v) for v in row] for row in self.payoff],
        }


@dataclass
class GameSolution:
    """Optimal strategies and value of a game matrix.

    ``alice_x`` is aligned with the matrix rows and ``bob_y`` with its columns.
    """

    matrix: GameMatrix
    alpha_star: Number
    alice_x: Tuple[Number, ...]
    bob_y: Tuple[Number, ...]
    beta: Number
    exact: bool = False

    @property
    def alice(self) -> RandomizedSolution:
        return RandomizedSolution.from_approximate(
            (row, x) for row, x in zip(self.matrix.rows, self.alice_x) if x > 0
        )

    @property
    def bob(self) -> List[Tuple[int, Number]]:
        return list(zip(self.matrix.cols, self.bob_y))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha_star": float(self.alpha_star),
            "beta": float(self.beta),
            "exact": self.exact,
            "alice": [
                {"set": sorted(row), "prob": float(x)}
                for row, x in zip(self.matrix.rows, self.alice_x)
                if x > 0
            ],
            "bob": [{"k": k, "y": float(y)} for k, y in self.bob],
        }


@dataclass
class VerificationReport:
    """Result of re-checking a game solution from scratch."""
    ok: bool
    violations: List[str] = field(default_factory=list)


def build_matrix(
    system: IndependenceSystem,
    weights: Sequence[Number],
    maximal_only: bool = True,
    profile: Optional[OptProfile] = None,
) -> GameMatrix:
    """Enumerate the game matrix.

    Rows are the maximal independent sets (all independent sets when
    ``maximal_only`` is False); columns are the cardinalities ``1..r`` with
    positive ``OPT_k``.
    """
    weights = validate_weights(weights, system.ground_size)
    profile = profile if profile is not None else opt_profile(system, weights)
    cols = tuple(k for k in range(1, profile.rank + 1) if profile.value(k) != 0)
    rows = tuple(enumerate_independent(system, maximal_only=maximal_only))

    payoff = []
    for items in rows:
        sums = prefix_weights(items, weights)
        payoff.append(tuple(div(sums[min(k, len(items))], profile.value(k)) for k in cols))

    logger.info(f"Game matrix for {system.describe()}: {len(rows)} rows x {len(cols)} columns")
    return GameMatrix(rows, cols, tuple(payoff), profile)


def solve_game(
    matrix: GameMatrix,
    exact: Optional[bool] = None,
    tolerance: Optional[float] = None,
) -> GameSolution:
    """Solve both sides of the game by linear programming.

    Args:
        matrix: Game matrix
        exact: Force the exact path (floats are then read as exact binary
            fractions); default is exact iff all entries are exact
        tolerance: Duality-gap tolerance for the float path

    Returns:
        GameSolution with value, both strategies and the dual value

    Raises:
        InputError: If the matrix has no rows or no columns
        GuaranteeViolation: If the two LP values disagree
    """
    if not matrix.rows or not matrix.cols:
        raise InputError("Game matrix is empty")
    exact = matrix.exact if exact is None else exact
    tolerance = tolerance if tolerance is not None else get_settings().tolerance
    payoff = matrix.payoff
    if exact:
        payoff = tuple(
            tuple(Fraction(v) if isinstance(v, float) else v for v in row) for row in payoff
        )
    solver = SimplexSolver(exact=exact, tolerance=tolerance)
    n_rows, n_cols = len(matrix.rows), len(matrix.cols)

    # Alice: maximise alpha with sum_S payoff(S, k) x_S >= alpha for every k
    alice_constraints = [
        Constraint([-payoff[i][j] for i in range(n_rows)] + [1], Sense.LE, 0) for j in range(n_cols)
    ]
    alice_constraints.append(Constraint([1] * n_rows + [0], Sense.EQ, 1))
    primal = solver.maximize([0] * n_rows + [1], alice_constraints)

    # Bob: minimise beta with sum_k payoff(S, k) y_k <= beta for every S
    bob_constraints = [
        Constraint(list(payoff[i]) + [-1], Sense.LE, 0) for i in range(n_rows)
    ]
    bob_constraints.append(Constraint([1] * n_cols + [0], Sense.EQ, 1))
    dual = solver.maximize([0] * n_cols + [-1], bob_constraints)

    if primal.status is not LPStatus.OPTIMAL or dual.status is not LPStatus.OPTIMAL:
        raise GuaranteeViolation(f"Game LPs not optimal: {primal.status}, {dual.status}")

    alpha, beta = primal.x[-1], dual.x[-1]
    gap = alpha - beta
    if (gap != 0) if exact else abs(float(gap)) > tolerance:
        raise GuaranteeViolation(f"Duality gap {float(gap)} between game LPs")

    logger.info(f"Game value {float(alpha):.9f} ({'exact' if exact else 'float'}, {n_rows}x{n_cols})")
    return GameSolution(
        matrix=matrix,
        alpha_star=alpha,
        alice_x=primal.x[:-1],
        bob_y=dual.x[:-1],
        beta=beta,
        exact=exact,
    )


def verify_solution(
    matrix: GameMatrix,
    solution: GameSolution,
    tolerance: Optional[float] = None,
) -> VerificationReport:
    """Re-evaluate every primal and dual constraint of a claimed solution."""
    tol = tolerance if tolerance is not None else get_settings().tolerance
    report = VerificationReport(ok=True)
    alpha, beta = float(solution.alpha_star), float(solution.beta)
    x = [float(v) for v in solution.alice_x]
    y = [float(v) for v in solution.bob_y]

    def violate(message: str):
        report.ok = False
        report.violations.append(message)

    if len(x) != len(matrix.rows) or len(y) != len(matrix.cols):
        violate("Strategy lengths do not match the matrix")
        return report

    if any(v < -tol for v in x):
        violate("Alice has a negative probability")
    if abs(sum(x) - 1) > tol:
        violate(f"Alice's probabilities sum to {sum(x):.12g}")
    for j, k in enumerate(matrix.cols):
        achieved = sum(float(matrix.payoff[i][j]) * x[i] for i in range(len(x)))
        if achieved < alpha - tol:
            violate(f"Alice achieves {achieved:.12g} < {alpha:.12g} at k={k}")

    if any(v < -tol for v in y):
        violate("Bob has a negative probability")
    if abs(sum(y) - 1) > tol:
        violate(f"Bob's probabilities sum to {sum(y):.12g}")
    for i, row in enumerate(matrix.rows):
        conceded = sum(float(matrix.payoff[i][j]) * y[j] for j in range(len(y)))
        if conceded > beta + tol:
            violate(f"Row {sorted(row)} earns {conceded:.12g} > {beta:.12g} against Bob")

    if abs(alpha - beta) > tol:
        violate(f"Duality gap {alpha - beta:.12g}")
    return report


def deterministic_best(matrix: GameMatrix) -> Tuple[ElementSet, Number]:
    """Best pure strategy for Alice: the most robust single row."""
    if not matrix.rows:
        raise InputError("Game matrix has no rows")
    best: Optional[Tuple[Number, ElementSet]] = None
    for items, row in zip(matrix.rows, matrix.payoff):
        value = min(row) if row else 1
        if best is None or value > best[0]:
            best = (value, items)
    return best[1], best[0]


def asymptotic_deterministic_best(
    system: IndependenceSystem,
    weights: Sequence[Number],
    min_k: int,
) -> Tuple[ElementSet, Number]:
    """Best maximal set when only cardinalities ``k >= min_k`` count."""
    return deterministic_best(build_matrix(system, weights).restrict(min_k))


def induced_priority(solution: GameSolution) -> PriorityDistribution:
    """Bob's strategy as a priority distribution: ``mu_k`` proportional to ``y_k / OPT_k``."""
    profile = solution.matrix.profile
    scaled = {
        k: div(normalize(y), profile.value(k))
        for k, y in zip(solution.matrix.cols, solution.bob_y)
        if y > 0
    }
    total: Number = 0
    for value in scaled.values():
        total = total + value
    return PriorityDistribution.from_mapping({k: div(v, total) for k, v in scaled.items()})
