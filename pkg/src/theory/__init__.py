"""Structural checks on small independence systems.

Components:
- BitFunction / sample_bit_functions: power-of-two weightings
- MinorSpec / apply_minor: deletions, contractions and truncations
- check_bit_concave / check_good / check_extendible: property checks
- check_theorem32: agreement of the four characterisations of good systems
"""

from src.theory.bit_functions import BitFunction, sample_bit_functions
from src.theory.minors import (
    Contract,
    Delete,
    MinorSpec,
    Truncate,
    apply_minor,
    random_minor_specs,
    single_step_minors,
)
from src.theory.checkers import (
    CheckResult,
    Theorem32Report,
    check_2_extendible,
    check_bit_concave,
    check_bit_concave_for,
    check_extendible,
    check_good,
    check_good_sampled,
    check_theorem32,
)

__all__ = [
    "BitFunction",
    "sample_bit_functions",
    "Contract",
    "Delete",
    "MinorSpec",
    "Truncate",
    "apply_minor",
    "random_minor_specs",
    "single_step_minors",
    "CheckResult",
    "Theorem32Report",
    "check_2_extendible",
    "check_bit_concave",
    "check_bit_concave_for",
    "check_extendible",
    "check_good",
    "check_good_sampled",
    "check_theorem32",
]
