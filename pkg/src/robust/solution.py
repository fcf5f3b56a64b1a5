"""Finite probability distributions over independent sets."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.systems.base import ElementSet, IndependenceSystem
from src.utils.config import get_settings
from src.utils.errors import InputError
from src.utils.numbers import Number, fraction_from_float, normalize


@dataclass(frozen=True)
class RandomizedSolution:
    """Support sets with exact rational probabilities summing to one."""

    support: Tuple[Tuple[ElementSet, Fraction], ...]

    def __post_init__(self):
        entries = []
        for items, prob in self.support:
            if isinstance(prob, float) or not isinstance(prob, (int, Fraction)):
                raise InputError(f"Probabilities must be exact rationals, got {prob!r}")
            prob = Fraction(prob)
            if prob <= 0:
                raise InputError(f"Support probability must be positive, got {prob}")
            entries.append((frozenset(items), prob))
        if not entries:
            raise InputError("Distribution has empty support")
        total = sum(p for _, p in entries)
        if total != 1:
            raise InputError(f"Probabilities sum to {total}, not 1")
        object.__setattr__(self, "support", tuple(entries))

    @classmethod
    def point_mass(cls, items: Iterable[int]) -> "RandomizedSolution":
        return cls(((frozenset(items), Fraction(1)),))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Iterable[int], Fraction]]) -> "RandomizedSolution":
        """Build a distribution, merging repeated sets and dropping zero mass."""
        merged: Dict[ElementSet, Fraction] = {}
        for items, prob in pairs:
            items = frozenset(items)
            merged[items] = merged.get(items, Fraction(0)) + Fraction(prob)
        return cls(tuple((s, p) for s, p in merged.items() if p != 0))

    @classmethod
    def from_approximate(
        cls,
        pairs: Iterable[Tuple[Iterable[int], Number]],
        bits: Optional[int] = None,
    ) -> "RandomizedSolution":
        """Round float or irrational probabilities onto a ``2**-bits`` grid and renormalise."""
        bits = bits if bits is not None else get_settings().interval_precision_bits
        rounded: List[Tuple[ElementSet, Fraction]] = []
        for items, prob in pairs:
            prob = normalize(prob)
            exact = prob if isinstance(prob, (int, Fraction)) else fraction_from_float(float(prob), bits)
            if exact > 0:
                rounded.append((frozenset(items), Fraction(exact)))
        total = sum(p for _, p in rounded)
        if total <= 0:
            raise InputError("Distribution has no positive mass")
        return cls.from_pairs((s, p / total) for s, p in rounded)

    @property
    def sets(self) -> List[ElementSet]:
        return [s for s, _ in self.support]

    def probability(self, items: Iterable[int]) -> Fraction:
        items = frozenset(items)
        return sum((p for s, p in self.support if s == items), Fraction(0))

    def check_independent(self, system: IndependenceSystem):
        """Raises InputError if some support set is dependent."""
        for items, _ in self.support:
            if not system.is_independent(items):
                raise InputError(f"Support set {sorted(items)} is not independent")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "support": [
                {"set": sorted(items), "prob": {"num": p.numerator, "den": p.denominator}}
                for items, p in self.support
            ]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RandomizedSolution":
        try:
            return cls(
                tuple(
                    (frozenset(entry["set"]), Fraction(entry["prob"]["num"], entry["prob"]["den"]))
                    for entry in data["support"]
                )
            )
        except (KeyError, TypeError, ZeroDivisionError) as e:
            raise InputError(f"Malformed distribution document: {e}")
