"""Optimal randomized robustness as a zero-sum game.

Components:
- SimplexSolver: dense two-phase simplex over exact or float entries
- GameMatrix / build_matrix: payoffs w(S_k) / OPT_k
- solve_game / verify_solution: both players' optimal strategies
"""

from src.game.simplex import Constraint, LPResult, LPStatus, Sense, SimplexSolver
from src.game.matrix_game import (
    GameMatrix,
    GameSolution,
    VerificationReport,
    asymptotic_deterministic_best,
    build_matrix,
    deterministic_best,
    induced_priority,
    solve_game,
    verify_solution,
)

__all__ = [
    "Constraint",
    "LPResult",
    "LPStatus",
    "Sense",
    "SimplexSolver",
    "GameMatrix",
    "GameSolution",
    "VerificationReport",
    "asymptotic_deterministic_best",
    "build_matrix",
    "deterministic_best",
    "induced_priority",
    "solve_game",
    "verify_solution",
]
