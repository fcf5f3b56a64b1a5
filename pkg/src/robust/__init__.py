"""Robust solutions and their evaluation.

Components:
- RandomizedSolution: exact distributions over independent sets
- robustness / randomized_robustness: per-k ratios against OPT_k
- rounded_weights / randomized_robust: power-of-two rounding algorithm
- squared_weight_solution: deterministic 1/sqrt(2)-robust matchings
- PriorityDistribution and priority objectives
"""

from src.robust.solution import RandomizedSolution
from src.robust.evaluation import KRatio, RobustnessReport, randomized_robustness, robustness
from src.robust.rounding import randomized_robust, rounded_weights
from src.robust.squared import squared_weight_solution
from src.robust.priority import (
    PriorityDistribution,
    priorities_to_mu,
    mu_to_priorities,
    priority_best_in_support,
    priority_optimum,
    priority_value,
    random_priority_distribution,
)

__all__ = [
    "RandomizedSolution",
    "KRatio",
    "RobustnessReport",
    "randomized_robustness",
    "robustness",
    "randomized_robust",
    "rounded_weights",
    "squared_weight_solution",
    "PriorityDistribution",
    "priorities_to_mu",
    "mu_to_priorities",
    "priority_best_in_support",
    "priority_optimum",
    "priority_value",
    "random_priority_distribution",
]
