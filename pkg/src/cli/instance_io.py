"""Instance documents: parsing, validation and serialisation.

Three document types are accepted::

    {"type": "graph", "n": 4, "edges": [{"u": 0, "v": 1, "w": 1}, ...], "b": [1, 2, ...]}
    {"type": "explicit", "ground": 6, "bases": [[0, 1], ...], "weights": [...]}
    {"type": "matroid_intersection", "ground": 5,
     "first": {"kind": "uniform", "rank": 2},
     "second": {"kind": "partition", "blocks": [[0, 1], [2, 3, 4]], "capacities": [1, 1]},
     "weights": [...]}

Weights are JSON numbers or exact ``{"num": a, "den": b, "sqrt2_coeff": c}``
objects standing for ``a/b + c*sqrt(2)``, where ``c`` is a number or a
``{"num", "den"}`` object.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, Field, StrictInt, TypeAdapter, ValidationError, field_validator

from src.systems.base import IndependenceSystem
from src.systems.families import (
    BMatchingSystem,
    ExplicitSystem,
    MatchingSystem,
    Matroid,
    MatroidIntersection,
    PartitionMatroid,
    UniformMatroid,
)
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError
from src.utils.numbers import Number, Surd, normalize


class RationalModel(BaseModel):
    num: int
    den: int = 1

    @field_validator("den")
    @classmethod
    def positive_denominator(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("denominator must be positive")
        return value


class ExactWeightModel(RationalModel):
    sqrt2_coeff: Union[StrictInt, RationalModel] = 0


WeightValue = Union[StrictInt, float, ExactWeightModel]


class EdgeModel(BaseModel):
    u: int
    v: int
    w: WeightValue = 1


class GraphDocument(BaseModel):
    type: Literal["graph"]
    n: int = Field(ge=0)
    edges: List[EdgeModel] = Field(default_factory=list)
    b: Optional[List[int]] = None


class ExplicitDocument(BaseModel):
    type: Literal["explicit"]
    ground: int = Field(ge=0)
    bases: List[List[int]]
    weights: Optional[List[WeightValue]] = None
    labels: Optional[List[str]] = None


class MatroidModel(BaseModel):
    kind: Literal["uniform", "partition"]
    rank: Optional[int] = None
    blocks: Optional[List[List[int]]] = None
    capacities: Optional[List[int]] = None


class MatroidIntersectionDocument(BaseModel):
    type: Literal["matroid_intersection"]
    ground: int = Field(ge=0)
    first: MatroidModel
    second: MatroidModel
    weights: List[WeightValue]


InstanceDocument = Annotated[
    Union[GraphDocument, ExplicitDocument, MatroidIntersectionDocument],
    Field(discriminator="type"),
]
_DOCUMENT_ADAPTER = TypeAdapter(InstanceDocument)


@dataclass
class Instance:
    """A resolved instance: the system, its weights, and the graph when there is one."""

    name: str
    system: IndependenceSystem
    weights: tuple
    graph: Optional[WeightedGraph] = None

    @classmethod
    def from_graph(
        cls,
        graph: WeightedGraph,
        name: str = "graph",
        capacities: Optional[Sequence[int]] = None,
    ) -> "Instance":
        system = MatchingSystem(graph) if capacities is None else BMatchingSystem(graph, capacities)
        return cls(name, system, graph.weights, graph)

    @property
    def is_matching(self) -> bool:
        return isinstance(self.system, MatchingSystem)


# Weights


def decode_weight(value: Any) -> Number:
    """Turn a parsed weight into int, Fraction, Surd or float."""
    if isinstance(value, dict):
        try:
            value = ExactWeightModel.model_validate(value)
        except ValidationError as e:
            raise InputError(f"Invalid exact weight {value}: {e}")
    if isinstance(value, ExactWeightModel):
        coeff = value.sqrt2_coeff
        b = Fraction(coeff.num, coeff.den) if isinstance(coeff, RationalModel) else Fraction(coeff)
        return normalize(Surd(Fraction(value.num, value.den), b))
    if isinstance(value, bool):
        raise InputError(f"Invalid weight: {value!r}")
    if isinstance(value, (int, float)):
        return value
    raise InputError(f"Invalid weight: {value!r}")


def _rational(value: Fraction) -> Dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def encode_weight(value: Number) -> Union[int, float, Dict[str, Any]]:
    """Inverse of ``decode_weight``; ints and floats stay plain numbers."""
    value = normalize(value)
    if isinstance(value, Surd):
        return {**_rational(value.a), "sqrt2_coeff": _rational(value.b)}
    if isinstance(value, Fraction):
        return {**_rational(value), "sqrt2_coeff": 0}
    return value


# Documents


def _build_matroid(model: MatroidModel, ground: int) -> Matroid:
    if model.kind == "uniform":
        if model.rank is None:
            raise InputError("Uniform matroid needs a rank")
        return UniformMatroid(ground, model.rank)
    if model.blocks is None or model.capacities is None:
        raise InputError("Partition matroid needs blocks and capacities")
    return PartitionMatroid(ground, model.blocks, model.capacities)


def parse_instance(document: Dict[str, Any], name: str = "instance") -> Instance:
    """Validate an instance document and build the system.

    Raises:
        InputError: On schema errors or invalid systems
    """
    try:
        parsed = _DOCUMENT_ADAPTER.validate_python(document)
    except ValidationError as e:
        raise InputError(f"Invalid instance document: {e}")

    if isinstance(parsed, GraphDocument):
        graph = WeightedGraph(
            parsed.n,
            tuple((edge.u, edge.v) for edge in parsed.edges),
            tuple(decode_weight(edge.w) for edge in parsed.edges),
        )
        return Instance.from_graph(graph, name, parsed.b)

    if isinstance(parsed, ExplicitDocument):
        weights = (
            tuple(decode_weight(w) for w in parsed.weights)
            if parsed.weights is not None
            else (1,) * parsed.ground
        )
        system = ExplicitSystem(parsed.ground, parsed.bases, parsed.labels)
        if len(weights) != parsed.ground:
            raise InputError(f"Expected {parsed.ground} weights, got {len(weights)}")
        return Instance(name, system, weights)

    system = MatroidIntersection(
        _build_matroid(parsed.first, parsed.ground),
        _build_matroid(parsed.second, parsed.ground),
    )
    weights = tuple(decode_weight(w) for w in parsed.weights)
    if len(weights) != parsed.ground:
        raise InputError(f"Expected {parsed.ground} weights, got {len(weights)}")
    return Instance(name, system, weights)


def _dump_matroid(matroid: Matroid) -> Dict[str, Any]:
    if isinstance(matroid, UniformMatroid):
        return {"kind": "uniform", "rank": matroid.rank}
    if isinstance(matroid, PartitionMatroid):
        return {
            "kind": "partition",
            "blocks": [list(block) for block in matroid.blocks],
            "capacities": list(matroid.capacities),
        }
    raise InputError(f"Cannot serialise matroid {matroid.describe()}")


def dump_instance(instance: Instance) -> Dict[str, Any]:
    """Instance document for ``instance``; ``parse_instance`` reads it back."""
    system = instance.system
    weights = [encode_weight(w) for w in instance.weights]
    if instance.graph is not None:
        document: Dict[str, Any] = {
            "type": "graph",
            "n": instance.graph.n_vertices,
            "edges": [
                {"u": u, "v": v, "w": w} for (u, v), w in zip(instance.graph.edges, weights)
            ],
        }
        if isinstance(system, BMatchingSystem):
            document["b"] = list(system.capacities)
        return document
    if isinstance(system, ExplicitSystem):
        document = {
            "type": "explicit",
            "ground": system.ground_size,
            "bases": [sorted(base) for base in system.bases],
            "weights": weights,
        }
        if system.labels is not None:
            document["labels"] = list(system.labels)
        return document
    if isinstance(system, MatroidIntersection):
        return {
            "type": "matroid_intersection",
            "ground": system.ground_size,
            "first": _dump_matroid(system.first),
            "second": _dump_matroid(system.second),
            "weights": weights,
        }
    raise InputError(f"Cannot serialise {system.describe()}")


def load_instance(path: Union[str, Path]) -> Instance:
    """Read an instance document from a JSON file.

    Raises:
        InputError: If the file is missing, not JSON, or not a valid instance
    """
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"Instance file not found: {path}")
    except json.JSONDecodeError as e:
        raise InputError(f"Instance file {path} is not valid JSON: {e}")
    return parse_instance(document, name=path.stem)
