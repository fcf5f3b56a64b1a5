"""Dense two-phase simplex over any ordered field.

The tableau is a numpy object array, so the same code runs exactly on
``Fraction`` and ``Surd`` entries and approximately on floats (with a
tolerance). Bland's rule picks entering and leaving variables, which rules
out cycling.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.utils.config import get_settings
from src.utils.errors import InputError, ResourceLimitError
from src.utils.logger import get_logger
from src.utils.numbers import Number, normalize, to_exact

logger = get_logger()


class Sense(Enum):
    """Constraint direction."""
    LE = "<="
    EQ = "="
    GE = ">="


@dataclass
class Constraint:
    """``coefficients . x (sense) rhs``."""
    coefficients: Sequence[Number]
    sense: Sense
    rhs: Number


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    """Outcome of a solve; ``x`` and ``objective`` are set when optimal."""
    status: LPStatus
    x: Tuple[Number, ...] = ()
    objective: Optional[Number] = None
    pivots: int = 0


class SimplexSolver:
    """Maximise ``c . x`` subject to linear constraints and ``x >= 0``."""

    def __init__(self, exact: bool = True, tolerance: Optional[float] = None, max_pivots: int = 100_000):
        """
        Initialize the solver.

        Args:
            exact: Run in exact arithmetic (entries must be int, Fraction or Surd)
            tolerance: Zero threshold for the float path (default from settings)
            max_pivots: Safety bound on the number of pivots
        """
        self.exact = exact
        self.eps = 0 if exact else (tolerance if tolerance is not None else get_settings().tolerance)
        self.max_pivots = max_pivots

    def _convert(self, value: Number) -> Number:
        return to_exact(value) if self.exact else float(value)

    def _pivot(self, tableau: np.ndarray, row: int, col: int):
        tableau[row] = tableau[row] / tableau[row, col]
        for i in range(tableau.shape[0]):
            if i != row and tableau[i, col] != 0:
                tableau[i] = tableau[i] - tableau[i, col] * tableau[row]

    def _price(self, tableau: np.ndarray, cost: List[Number], basis: List[int]):
        tableau[0, :] = self._convert(0)
        tableau[0, : len(cost)] = np.array(cost, dtype=object)
        for i, var in enumerate(basis, start=1):
            if cost[var] != 0:
                tableau[0] = tableau[0] - cost[var] * tableau[i]

    def _iterate(self, tableau: np.ndarray, basis: List[int], allowed: List[int]) -> Tuple[bool, int]:
        """Run Bland pivots until optimal (True) or unbounded (False)."""
        pivots = 0
        while True:
            entering = next((j for j in allowed if tableau[0, j] > self.eps), None)
            if entering is None:
                return True, pivots

            leaving = None
            best_ratio = None
            for i in range(1, tableau.shape[0]):
                if tableau[i, entering] > self.eps:
                    ratio = tableau[i, -1] / tableau[i, entering]
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i - 1] < basis[leaving - 1])
                    ):
                        leaving, best_ratio = i, ratio
            if leaving is None:
                return False, pivots

            self._pivot(tableau, leaving, entering)
            basis[leaving - 1] = entering
            pivots += 1
            if pivots > self.max_pivots:
                raise ResourceLimitError(f"Simplex exceeded {self.max_pivots} pivots")

    def maximize(self, objective: Sequence[Number], constraints: Sequence[Constraint]) -> LPResult:
        """Solve the LP.

        Args:
            objective: Objective coefficients ``c``
            constraints: Linear constraints over the same variables

        Returns:
            LPResult with status, primal solution and objective value
        """
        n = len(objective)
        rows = []
        for con in constraints:
            if len(con.coefficients) != n:
                raise InputError("Constraint width does not match the objective")
            coeffs = [self._convert(a) for a in con.coefficients]
            rhs, sense = self._convert(con.rhs), con.sense
            if rhs < 0:
                coeffs, rhs = [-a for a in coeffs], -rhs
                sense = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}[sense]
            rows.append((coeffs, sense, rhs))

        m = len(rows)
        n_slack = sum(1 for _, sense, _ in rows if sense is not Sense.EQ)
        n_art = sum(1 for _, sense, _ in rows if sense is not Sense.LE)
        width = n + n_slack + n_art
        zero, one = self._convert(0), self._convert(1)

        tableau = np.full((m + 1, width + 1), zero, dtype=object)
        basis: List[int] = []
        artificial: List[int] = []
        slack_col, art_col = n, n + n_slack
        for i, (coeffs, sense, rhs) in enumerate(rows, start=1):
            tableau[i, :n] = np.array(coeffs, dtype=object)
            tableau[i, -1] = rhs
            if sense is Sense.LE:
                tableau[i, slack_col] = one
                basis.append(slack_col)
                slack_col += 1
                continue
            if sense is Sense.GE:
                tableau[i, slack_col] = -one
                slack_col += 1
            tableau[i, art_col] = one
            basis.append(art_col)
            artificial.append(art_col)
            art_col += 1

        total_pivots = 0
        if artificial:
            phase_one = [zero] * width
            for col in artificial:
                phase_one[col] = -one
            self._price(tableau, phase_one, basis)
            _, pivots = self._iterate(tableau, basis, list(range(width)))
            total_pivots += pivots
            if -tableau[0, -1] < -self.eps:
                logger.debug(f"LP infeasible after phase one ({pivots} pivots)")
                return LPResult(LPStatus.INFEASIBLE, pivots=total_pivots)

            art_set = set(artificial)
            i = 1
            while i < tableau.shape[0]:
                if basis[i - 1] in art_set:
                    col = next(
                        (j for j in range(width) if j not in art_set and abs(tableau[i, j]) > self.eps),
                        None,
                    )
                    if col is None:
                        # Redundant equality row
                        tableau = np.delete(tableau, i, axis=0)
                        del basis[i - 1]
                        continue
                    self._pivot(tableau, i, col)
                    basis[i - 1] = col
                i += 1
            allowed = [j for j in range(width) if j not in art_set]
        else:
            allowed = list(range(width))

        cost = [self._convert(c) for c in objective] + [zero] * (width - n)
        self._price(tableau, cost, basis)
        optimal, pivots = self._iterate(tableau, basis, allowed)
        total_pivots += pivots
        if not optimal:
            return LPResult(LPStatus.UNBOUNDED, pivots=total_pivots)

        x = [zero] * n
        for i, var in enumerate(basis, start=1):
            if var < n:
                x[var] = tableau[i, -1]
        value = -tableau[0, -1]
        if self.exact:
            x = [normalize(v) for v in x]
            value = normalize(value)
        logger.debug(f"LP solved: {m} rows, {n} variables, {total_pivots} pivots")
        return LPResult(LPStatus.OPTIMAL, tuple(x), value, total_pivots)
