"""Robustness ratios of deterministic and randomized solutions."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from src.robust.solution import RandomizedSolution
from src.solvers.optimum import opt_profile
from src.solvers.profile import OptProfile
from src.systems.base import IndependenceSystem, prefix_weights
from src.systems.graph import validate_weights
from src.utils.errors import InputError
from src.utils.numbers import Number, div


@dataclass
class KRatio:
    """Achieved top-k weight against OPT_k for one cardinality."""
    k: int
    achieved: Number
    opt: Number
    ratio: Number


@dataclass
class RobustnessReport:
    """Per-k ratios and their minimum."""
    per_k: List[KRatio] = field(default_factory=list)
    alpha: Number = 1
    argmin_k: int = 0

    def ratio(self, k: int) -> Number:
        for row in self.per_k:
            if row.k == k:
                return row.ratio
        raise InputError(f"No ratio recorded for k={k}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": float(self.alpha),
            "argmin_k": self.argmin_k,
            "per_k": [
                {
                    "k": row.k,
                    "achieved": float(row.achieved),
                    "opt": float(row.opt),
                    "ratio": float(row.ratio),
                }
                for row in self.per_k
            ],
        }


def _build_report(profile: OptProfile, achieved: Callable[[int], Number], min_k: int) -> RobustnessReport:
    report = RobustnessReport()
    first = max(1, min_k)
    for k in range(first, max(profile.rank, first) + 1):
        opt = profile.value(k)
        value = achieved(k)
        ratio = 1 if opt == 0 else div(value, opt)
        report.per_k.append(KRatio(k=k, achieved=value, opt=opt, ratio=ratio))
        if opt != 0 and (report.argmin_k == 0 or ratio < report.alpha):
            report.alpha = ratio
            report.argmin_k = k
    return report


def robustness(
    system: IndependenceSystem,
    weights: Sequence[Number],
    items: Iterable[int],
    profile: Optional[OptProfile] = None,
    min_k: int = 1,
) -> RobustnessReport:
    """Ratios ``w(S_k) / OPT_k`` for ``k = min_k..r``.

    Args:
        system: Independence system
        weights: Weight per element id
        items: Independent set S
        profile: Precomputed OPT profile (computed when omitted)
        min_k: Smallest cardinality counted (asymptotic robustness)

    Raises:
        InputError: If S is not independent
    """
    weights = validate_weights(weights, system.ground_size)
    items = frozenset(items)
    if not system.is_independent(items):
        raise InputError(f"Set {sorted(items)} is not independent")
    profile = profile if profile is not None else opt_profile(system, weights)
    sums = prefix_weights(items, weights)
    return _build_report(profile, lambda k: sums[min(k, len(items))], min_k)


def randomized_robustness(
    system: IndependenceSystem,
    weights: Sequence[Number],
    solution: RandomizedSolution,
    profile: Optional[OptProfile] = None,
    min_k: int = 1,
) -> RobustnessReport:
    """Ratios ``E[w(S_k)] / OPT_k`` for a distribution over independent sets."""
    weights = validate_weights(weights, system.ground_size)
    solution.check_independent(system)
    profile = profile if profile is not None else opt_profile(system, weights)
    prefixes = [(prob, prefix_weights(items, weights)) for items, prob in solution.support]

    def expected(k: int) -> Number:
        total: Number = 0
        for prob, sums in prefixes:
            total = total + prob * sums[min(k, len(sums) - 1)]
        return total

    return _build_report(profile, expected, min_k)
