"""t-minors: systems reachable by deletions, contractions and truncations."""

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

import numpy as np

from src.systems.base import IndependenceSystem, enumerate_independent
from src.systems.minors import ContractionMinor, DeletionMinor, TruncationMinor
from src.utils.errors import InputError


@dataclass(frozen=True)
class Delete:
    items: FrozenSet[int]


@dataclass(frozen=True)
class Contract:
    items: FrozenSet[int]


@dataclass(frozen=True)
class Truncate:
    k: int


MinorOp = Union[Delete, Contract, Truncate]


@dataclass(frozen=True)
class MinorSpec:
    """Operations applied left to right."""

    ops: Tuple[MinorOp, ...] = ()

    def then(self, op: MinorOp) -> "MinorSpec":
        return MinorSpec(self.ops + (op,))

    def describe(self) -> str:
        parts = []
        for op in self.ops:
            if isinstance(op, Delete):
                parts.append(f"delete{sorted(op.items)}")
            elif isinstance(op, Contract):
                parts.append(f"contract{sorted(op.items)}")
            else:
                parts.append(f"truncate({op.k})")
        return " -> ".join(parts) or "identity"


def apply_minor(system: IndependenceSystem, spec: MinorSpec) -> IndependenceSystem:
    """Apply a minor specification.

    Raises:
        InputError: If a contracted set is dependent at the time it is applied
    """
    current = system
    for op in spec.ops:
        if isinstance(op, Delete):
            current = DeletionMinor(current, op.items)
        elif isinstance(op, Contract):
            current = ContractionMinor(current, op.items)
        elif isinstance(op, Truncate):
            current = TruncationMinor(current, op.k)
        else:
            raise InputError(f"Unknown minor operation {op!r}")
    return current


def single_step_minors(system: IndependenceSystem) -> List[MinorSpec]:
    """Every one-operation minor deleting or contracting a single element or truncating."""
    specs = []
    rank = max(len(s) for s in enumerate_independent(system))
    for e in system.elements:
        specs.append(MinorSpec((Delete(frozenset({e})),)))
        if system.is_independent({e}):
            specs.append(MinorSpec((Contract(frozenset({e})),)))
    for k in range(rank):
        specs.append(MinorSpec((Truncate(k),)))
    return specs


def random_minor_specs(
    system: IndependenceSystem,
    depth: int,
    count: int,
    rng: np.random.Generator,
) -> List[MinorSpec]:
    """Random compositions of up to ``depth`` operations, each valid when applied."""
    specs = []
    for _ in range(count):
        spec, current = MinorSpec(), system
        for _ in range(int(rng.integers(1, depth + 1))):
            elements = current.elements
            if not elements:
                break
            choice = rng.random()
            if choice < 0.4:
                op: MinorOp = Delete(frozenset({int(rng.choice(elements))}))
            elif choice < 0.8:
                independent = enumerate_independent(current)
                candidates = [s for s in independent if 0 < len(s) <= 2]
                if not candidates:
                    break
                op = Contract(candidates[int(rng.integers(0, len(candidates)))])
            else:
                op = Truncate(int(rng.integers(0, len(elements) + 1)))
            spec = spec.then(op)
            current = apply_minor(system, spec)
        specs.append(spec)
    return specs
