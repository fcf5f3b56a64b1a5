"""Executable checks of structural properties of independence systems.

- bit-concavity: OPT profiles are concave for every bit-function
- goodness: every lexicographically maximal set is 1-robust
- mu-extendibility: adding an element can be repaired by removing at most mu
- the equivalence of bit-concavity, bit-concavity of all minors,
  lexicographic optimality in minors, and goodness

The infinite space of bit-functions is sampled; every check runs in exact
integer arithmetic after scaling the sampled weights.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from src.solvers.branch_and_bound import enumerated_profile
from src.solvers.lexicographic import lex_max_sets
from src.systems.base import (
    IndependenceSystem,
    enumerate_independent,
    prefix_weights,
    set_weight,
)
from src.systems.minors import TruncationMinor
from src.theory.bit_functions import BitFunction, sample_bit_functions
from src.theory.minors import MinorSpec, apply_minor, random_minor_specs, single_step_minors
from src.utils.config import get_settings
from src.utils.logger import get_logger
from src.utils.numbers import Number, power_of_two

logger = get_logger()


@dataclass
class CheckResult:
    """Outcome of a sampled or exhaustive check."""
    holds: bool
    checked: int = 0
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"holds": self.holds, "checked": self.checked, "witness": self.witness}


class _Enumeration:
    """Independent and maximal sets of one system, enumerated once."""

    def __init__(self, system: IndependenceSystem):
        self.system = system
        self.sets = enumerate_independent(system)
        self.maximal = [
            s
            for s in self.sets
            if not any(e not in s and system.can_extend(s, e) for e in system.elements)
        ]


def _as_weights(weights: Union[BitFunction, Sequence[Number]]):
    if isinstance(weights, BitFunction):
        return weights.integer_weights(), weights.scale_exponent
    return tuple(weights), 0


def _concavity_witness(cache: _Enumeration, bit_function: BitFunction) -> Optional[Dict[str, Any]]:
    weights = bit_function.integer_weights()
    profile = enumerated_profile(cache.system, weights, sets=cache.sets)
    k = profile.concavity_violation()
    if k is None:
        return None
    unit = power_of_two(bit_function.scale_exponent)
    return {
        "exponents": list(bit_function.exponents),
        "k": k,
        "opt": [float(v * unit) for v in profile.values],
    }


def _goodness_witness(
    cache: _Enumeration, weights, scale_exponent: int = 0
) -> Optional[Dict[str, Any]]:
    profile = enumerated_profile(cache.system, weights, sets=cache.sets)
    unit = power_of_two(scale_exponent)
    for items in lex_max_sets(cache.system, weights, maximal=cache.maximal):
        sums = prefix_weights(items, weights)
        for k in range(1, profile.rank + 1):
            achieved = sums[min(k, len(items))]
            if achieved != profile.value(k):
                return {
                    "set": sorted(items),
                    "k": k,
                    "achieved": float(achieved * unit),
                    "opt": float(profile.value(k) * unit),
                }
    return None


def _lex_optimality_witness(cache: _Enumeration, weights) -> Optional[Dict[str, Any]]:
    best = max(set_weight(s, weights) for s in cache.maximal)
    for items in lex_max_sets(cache.system, weights, maximal=cache.maximal):
        value = set_weight(items, weights)
        if value != best:
            return {"set": sorted(items), "weight": float(value), "best": float(best)}
    return None


def check_bit_concave_for(system: IndependenceSystem, bit_function: BitFunction) -> CheckResult:
    """Concavity of the OPT profile for one bit-function."""
    witness = _concavity_witness(_Enumeration(system), bit_function)
    return CheckResult(holds=witness is None, checked=1, witness=witness)


def check_bit_concave(
    system: IndependenceSystem,
    samples: Optional[int] = None,
    exponent_range: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> CheckResult:
    """Sample bit-functions and look for ``OPT_k + OPT_{k+2} > 2 OPT_{k+1}``.

    Args:
        system: System to check (within the enumeration cap)
        samples: Number of bit-functions (default from settings)
        exponent_range: ``(low, high)`` for uniform exponents (default from settings)
        seed: Random seed (default from settings)

    Returns:
        CheckResult whose witness holds the exponents, the violated k and the profile
    """
    low, high = exponent_range if exponent_range is not None else (None, None)
    cache = _Enumeration(system)
    checked = 0
    for bit_function in sample_bit_functions(system.ground_size, samples, low, high, seed):
        checked += 1
        witness = _concavity_witness(cache, bit_function)
        if witness is not None:
            logger.debug(f"Concavity violation on {system.describe()} after {checked} samples")
            return CheckResult(holds=False, checked=checked, witness=witness)
    return CheckResult(holds=True, checked=checked)


def check_good(
    system: IndependenceSystem, weights: Union[BitFunction, Sequence[Number]]
) -> CheckResult:
    """Whether every lexicographically maximal set reaches ``OPT_k`` for every k.

    Args:
        system: System to check (within the enumeration cap)
        weights: A bit-function, or explicit weights

    Returns:
        CheckResult whose witness holds the failing set and k
    """
    weights, scale_exponent = _as_weights(weights)
    witness = _goodness_witness(_Enumeration(system), weights, scale_exponent)
    return CheckResult(holds=witness is None, checked=1, witness=witness)


def check_good_sampled(
    system: IndependenceSystem,
    samples: Optional[int] = None,
    exponent_range: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> CheckResult:
    """Goodness over sampled bit-functions."""
    low, high = exponent_range if exponent_range is not None else (None, None)
    cache = _Enumeration(system)
    checked = 0
    for bit_function in sample_bit_functions(system.ground_size, samples, low, high, seed):
        checked += 1
        witness = _goodness_witness(
            cache, bit_function.integer_weights(), bit_function.scale_exponent
        )
        if witness is not None:
            witness["exponents"] = list(bit_function.exponents)
            return CheckResult(holds=False, checked=checked, witness=witness)
    return CheckResult(holds=True, checked=checked)


def check_extendible(system: IndependenceSystem, mu: int = 2) -> CheckResult:
    """Exhaustive mu-extendibility check.

    For independent ``X``, ``Y`` and ``y`` in ``Y - X`` there must be
    ``Z`` within ``X - Y`` of size at most ``mu`` such that
    ``(X + y) - Z`` is independent. Only ``X & Y`` matters, so ``Y`` ranges
    over ``T + y`` for subsets ``T`` of ``X``.
    """
    sets = enumerate_independent(system)
    checked = 0
    for x_set in sets:
        ordered = sorted(x_set)
        for y in system.elements:
            if y in x_set or not system.is_independent({y}):
                continue
            union = x_set | {y}
            checked += 1
            if system.is_independent(union):
                continue
            repairs = [
                frozenset(z)
                for size in range(1, mu + 1)
                for z in combinations(ordered, size)
                if system.is_independent(union - frozenset(z))
            ]
            for size in range(len(ordered) + 1):
                for t in combinations(ordered, size):
                    t_set = frozenset(t)
                    if not system.is_independent(t_set | {y}):
                        continue
                    if not any(not (z & t_set) for z in repairs):
                        return CheckResult(
                            holds=False,
                            checked=checked,
                            witness={"X": ordered, "Y": sorted(t_set | {y}), "y": y},
                        )
    return CheckResult(holds=True, checked=checked)


def check_2_extendible(system: IndependenceSystem) -> CheckResult:
    return check_extendible(system, mu=2)


@dataclass
class Theorem32Report:
    """The four equivalent predicates and whether they agree."""
    bit_concave: bool
    minors_bit_concave: bool
    lex_optimal_in_minors: bool
    good: bool
    minors_checked: int
    samples: int
    escalated: bool = False
    witnesses: Dict[str, Any] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        values = {self.bit_concave, self.minors_bit_concave, self.lex_optimal_in_minors, self.good}
        return len(values) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bit_concave": self.bit_concave,
            "minors_bit_concave": self.minors_bit_concave,
            "lex_optimal_in_minors": self.lex_optimal_in_minors,
            "good": self.good,
            "agree": self.agree,
            "minors_checked": self.minors_checked,
            "samples": self.samples,
            "escalated": self.escalated,
            "witnesses": self.witnesses,
        }


def _scan(
    system: IndependenceSystem,
    minors: List[MinorSpec],
    bit_functions: List[BitFunction],
    minor_samples: int,
    report: Theorem32Report,
):
    """Evaluate all four predicates over the given samples, recording first witnesses."""
    cache = _Enumeration(system)
    for bit_function in bit_functions:
        if report.bit_concave:
            witness = _concavity_witness(cache, bit_function)
            if witness is not None:
                report.bit_concave = False
                report.witnesses["bit_concave"] = witness
        if report.good:
            witness = _goodness_witness(
                cache, bit_function.integer_weights(), bit_function.scale_exponent
            )
            if witness is not None:
                witness["exponents"] = list(bit_function.exponents)
                report.good = False
                report.witnesses["good"] = witness

    # Truncations of the system itself, then proper minors
    rank = max(len(s) for s in cache.sets)
    views = [(f"truncate({k})", TruncationMinor(system, k)) for k in range(1, rank + 1)]
    views += [(spec.describe(), apply_minor(system, spec)) for spec in minors]
    for label, minor in views:
        minor_cache = _Enumeration(minor)
        for bit_function in bit_functions[:minor_samples]:
            if report.minors_bit_concave:
                witness = _concavity_witness(minor_cache, bit_function)
                if witness is not None:
                    witness["minor"] = label
                    report.minors_bit_concave = False
                    report.witnesses["minors_bit_concave"] = witness
            if report.lex_optimal_in_minors:
                witness = _lex_optimality_witness(minor_cache, bit_function.integer_weights())
                if witness is not None:
                    witness["minor"] = label
                    witness["exponents"] = list(bit_function.exponents)
                    report.lex_optimal_in_minors = False
                    report.witnesses["lex_optimal_in_minors"] = witness
    report.minors_checked = len(views)


def check_theorem32(
    system: IndependenceSystem,
    minor_depth: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    minor_samples: Optional[int] = None,
    extra: Optional[Sequence[BitFunction]] = None,
) -> Theorem32Report:
    """Evaluate the four equivalent characterisations of good systems.

    (i) bit-concavity, (ii) bit-concavity of t-minors, (iii) lexicographic
    maxima are weight-maximal in every t-minor, (iv) goodness. Predicates
    share the sampled bit-functions; when they disagree the scan is repeated
    with the escalation budget before reporting.

    Args:
        system: Small system
        minor_depth: Depth of random minor compositions (default from settings)
        samples: Bit-functions for the system itself (default from settings)
        seed: Random seed (default from settings)
        minor_samples: Bit-functions per minor (default: a tenth of samples, at least 20)
        extra: Bit-functions checked before the sampled ones

    Returns:
        Theorem32Report with predicate values, witnesses and agreement
    """
    settings = get_settings()
    depth = minor_depth if minor_depth is not None else settings.minor_depth
    samples = samples if samples is not None else settings.bit_function_samples
    seed = seed if seed is not None else settings.default_seed
    per_minor = minor_samples if minor_samples is not None else max(20, samples // 10)

    rng = np.random.default_rng(seed)
    minors = single_step_minors(system)
    if depth > 1:
        minors += random_minor_specs(system, depth, 2 * len(system.elements), rng)

    bit_functions = list(extra or ())
    bit_functions += sample_bit_functions(system.ground_size, samples, seed=seed)
    report = Theorem32Report(True, True, True, True, minors_checked=0, samples=samples)
    _scan(system, minors, bit_functions, per_minor, report)

    if not report.agree:
        budget = settings.escalation_samples
        logger.info(f"Predicates disagree on {system.describe()}; escalating to {budget} samples")
        escalated = list(sample_bit_functions(system.ground_size, budget, seed=seed + 1))
        _scan(system, minors, escalated, max(per_minor, budget // 10), report)
        report.samples += budget
        report.escalated = True

    if not report.agree:
        logger.warning(f"Structural predicates disagree on {system.describe()}: {report.to_dict()}")
    return report
