"""Named constructions and seeded random instances.

Named constructions:
- fig1: path a-b-c-d with weights (1, sqrt 2, 1)
- remark23: the tightness family for the rounding algorithm
- copies: K disjoint copies of fig1
- lemma28: 2-extendible system that is not good

Random families (reproducible for a fixed seed):
- random: G(n, p) graph
- random_bipartite: bipartite G(n_left, n_right, p)
- random_b_matching: G(n, p) with vertex capacities
- random_matroid_intersection: uniform matroid x partition matroid
"""

import math
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.cli.instance_io import Instance
from src.systems.families import (
    ExplicitSystem,
    MatroidIntersection,
    PartitionMatroid,
    UniformMatroid,
)
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError
from src.utils.logger import get_logger
from src.utils.numbers import SQRT2, Number, power_of_two

logger = get_logger()

WEIGHT_DISTRIBUTIONS = ("uniform-int", "log-uniform")

LEMMA28_LABELS = ("a1", "a2", "b1", "b2", "b3", "b4")
LEMMA28_BASES = ((0, 1), (2, 3, 4, 5), (0, 4, 5), (1, 4, 5))
LEMMA28_WEIGHTS: Tuple[int, ...] = (2, 2, 2, 1, 1, 1)


def _fig1_edges(offset: int) -> List[Tuple[int, int]]:
    return [(offset, offset + 1), (offset + 1, offset + 2), (offset + 2, offset + 3)]


def gen_fig1() -> WeightedGraph:
    """Path on four vertices; the middle edge weighs sqrt 2 exactly."""
    return WeightedGraph(4, tuple(_fig1_edges(0)), (1, SQRT2, 1))


def gen_copies(K: int) -> WeightedGraph:
    """``K`` disjoint copies of ``gen_fig1``."""
    if K < 1:
        raise InputError(f"Number of copies must be at least 1, got {K}")
    edges: List[Tuple[int, int]] = []
    weights: List[Number] = []
    for copy in range(K):
        edges.extend(_fig1_edges(4 * copy))
        weights.extend((1, SQRT2, 1))
    return WeightedGraph(4 * K, tuple(edges), tuple(weights))


def _power_of_two_fraction(exponent: Fraction) -> Number:
    """``2 ** exponent``: exact for integer and half-integer exponents, float otherwise."""
    doubled = 2 * exponent
    if doubled.denominator != 1:
        return 2 ** float(exponent)
    doubled_int = int(doubled)
    whole = power_of_two(doubled_int // 2)
    return whole * SQRT2 if doubled_int % 2 else whole


def gen_remark23(n: int) -> WeightedGraph:
    """``2**n`` vertices with type-k edges ``{v_i, v_{i + 2**k}}`` for ``i < 2**k``.

    Type-k edges weigh ``2**((n-k)/n)``.

    Raises:
        InputError: If n is outside 1..12
    """
    if not 1 <= n <= 12:
        raise InputError(f"n must lie in 1..12, got {n}")
    edges: List[Tuple[int, int]] = []
    weights: List[Number] = []
    for k in range(n):
        weight = _power_of_two_fraction(Fraction(n - k, n))
        for i in range(2**k):
            edges.append((i, i + 2**k))
            weights.append(weight)
    return WeightedGraph(2**n, tuple(edges), tuple(weights))


def gen_lemma28() -> ExplicitSystem:
    """Bases ``{a1,a2}``, ``{b1..b4}``, ``{a1,b3,b4}``, ``{a2,b3,b4}`` on ids 0..5.

    ``LEMMA28_WEIGHTS`` is a bit-function under which the only
    lexicographic maximum ``{a1, a2}`` is not 1-robust.
    """
    return ExplicitSystem(6, LEMMA28_BASES, LEMMA28_LABELS)


def _draw_weights(
    count: int,
    weight_dist: str,
    max_weight: int,
    rng: np.random.Generator,
) -> Tuple[Number, ...]:
    if max_weight < 1:
        raise InputError(f"max_weight must be at least 1, got {max_weight}")
    if weight_dist == "uniform-int":
        return tuple(int(w) for w in rng.integers(1, max_weight + 1, size=count))
    if weight_dist == "log-uniform":
        return tuple(float(w) for w in np.exp(rng.uniform(0, math.log(max_weight), size=count)))
    raise InputError(
        f"Unknown weight distribution '{weight_dist}', expected one of {WEIGHT_DISTRIBUTIONS}"
    )


def _check_probability(edge_prob: float) -> None:
    if not 0 <= edge_prob <= 1:
        raise InputError(f"edge_prob must lie in [0, 1], got {edge_prob}")


def gen_random(
    n_vertices: int,
    edge_prob: float,
    weight_dist: str = "uniform-int",
    seed: int = 0,
    max_weight: int = 10,
) -> WeightedGraph:
    """Erdos-Renyi graph with random weights.

    Args:
        n_vertices: Number of vertices
        edge_prob: Independent edge probability
        weight_dist: ``uniform-int`` (integers in [1, W]) or ``log-uniform`` (reals in [1, W])
        seed: Random seed
        max_weight: W

    Returns:
        WeightedGraph with edges in sorted order
    """
    if n_vertices < 0:
        raise InputError(f"n_vertices must be non-negative, got {n_vertices}")
    _check_probability(edge_prob)
    graph = nx.gnp_random_graph(n_vertices, edge_prob, seed=seed)
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges)
    rng = np.random.default_rng(seed)
    weights = _draw_weights(len(edges), weight_dist, max_weight, rng)
    return WeightedGraph(n_vertices, tuple(edges), weights)


def gen_random_bipartite(
    n_left: int,
    n_right: int,
    edge_prob: float,
    weight_dist: str = "uniform-int",
    seed: int = 0,
    max_weight: int = 10,
) -> WeightedGraph:
    """Random bipartite graph; left vertices are ``0..n_left-1``."""
    if n_left < 0 or n_right < 0:
        raise InputError("Side sizes must be non-negative")
    _check_probability(edge_prob)
    graph = nx.bipartite.random_graph(n_left, n_right, edge_prob, seed=seed)
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges)
    rng = np.random.default_rng(seed)
    return WeightedGraph(
        n_left + n_right, tuple(edges), _draw_weights(len(edges), weight_dist, max_weight, rng)
    )


def gen_random_b_matching(
    n_vertices: int,
    edge_prob: float,
    max_capacity: int = 2,
    weight_dist: str = "uniform-int",
    seed: int = 0,
    max_weight: int = 10,
) -> Tuple[WeightedGraph, Tuple[int, ...]]:
    """Random graph plus vertex capacities drawn from ``1..max_capacity``."""
    if max_capacity < 1:
        raise InputError(f"max_capacity must be at least 1, got {max_capacity}")
    graph = gen_random(n_vertices, edge_prob, weight_dist, seed, max_weight)
    rng = np.random.default_rng(seed + 1)
    capacities = tuple(int(b) for b in rng.integers(1, max_capacity + 1, size=n_vertices))
    return graph, capacities


def gen_random_matroid_intersection(
    ground_size: int,
    n_blocks: int = 3,
    weight_dist: str = "uniform-int",
    seed: int = 0,
    max_weight: int = 10,
) -> Tuple[MatroidIntersection, Tuple[Number, ...]]:
    """Uniform matroid of random rank intersected with a random partition matroid."""
    if ground_size < 1 or n_blocks < 1:
        raise InputError("ground_size and n_blocks must be positive")
    rng = np.random.default_rng(seed)
    rank = int(rng.integers(1, ground_size + 1))
    assignment = rng.integers(0, n_blocks, size=ground_size)
    blocks = [
        [e for e in range(ground_size) if assignment[e] == block]
        for block in range(n_blocks)
    ]
    blocks = [block for block in blocks if block]
    capacities = [int(c) for c in rng.integers(1, 3, size=len(blocks))]
    system = MatroidIntersection(
        UniformMatroid(ground_size, rank),
        PartitionMatroid(ground_size, blocks, capacities),
    )
    return system, _draw_weights(ground_size, weight_dist, max_weight, rng)


# Registry used by --gen name:key=value,...


def _fig1_instance(params: Dict[str, Any]) -> Instance:
    return Instance.from_graph(gen_fig1(), "fig1")


def _remark23_instance(params: Dict[str, Any]) -> Instance:
    n = int(params.get("n", 4))
    return Instance.from_graph(gen_remark23(n), f"remark23(n={n})")


def _copies_instance(params: Dict[str, Any]) -> Instance:
    K = int(params.get("K", params.get("k", 2)))
    return Instance.from_graph(gen_copies(K), f"copies(K={K})")


def _lemma28_instance(params: Dict[str, Any]) -> Instance:
    return Instance("lemma28", gen_lemma28(), LEMMA28_WEIGHTS)


def _random_instance(params: Dict[str, Any]) -> Instance:
    graph = gen_random(
        int(params.get("n", 6)),
        float(params.get("p", 0.5)),
        str(params.get("dist", "uniform-int")),
        int(params.get("seed", 0)),
        int(params.get("W", 10)),
    )
    return Instance.from_graph(graph, "random")


def _random_bipartite_instance(params: Dict[str, Any]) -> Instance:
    graph = gen_random_bipartite(
        int(params.get("left", 3)),
        int(params.get("right", 3)),
        float(params.get("p", 0.6)),
        str(params.get("dist", "uniform-int")),
        int(params.get("seed", 0)),
        int(params.get("W", 10)),
    )
    return Instance.from_graph(graph, "random_bipartite")


def _random_b_matching_instance(params: Dict[str, Any]) -> Instance:
    graph, capacities = gen_random_b_matching(
        int(params.get("n", 5)),
        float(params.get("p", 0.5)),
        int(params.get("bmax", 2)),
        str(params.get("dist", "uniform-int")),
        int(params.get("seed", 0)),
        int(params.get("W", 10)),
    )
    return Instance.from_graph(graph, "random_b_matching", capacities)


def _random_matroid_intersection_instance(params: Dict[str, Any]) -> Instance:
    system, weights = gen_random_matroid_intersection(
        int(params.get("ground", 6)),
        int(params.get("blocks", 3)),
        str(params.get("dist", "uniform-int")),
        int(params.get("seed", 0)),
        int(params.get("W", 10)),
    )
    return Instance("random_matroid_intersection", system, weights)


GENERATORS: Dict[str, Callable[[Dict[str, Any]], Instance]] = {
    "fig1": _fig1_instance,
    "remark23": _remark23_instance,
    "copies": _copies_instance,
    "lemma28": _lemma28_instance,
    "random": _random_instance,
    "random_bipartite": _random_bipartite_instance,
    "random_b_matching": _random_b_matching_instance,
    "random_matroid_intersection": _random_matroid_intersection_instance,
}


def _parse_value(text: str) -> Any:
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def parse_generator_spec(spec: str) -> Tuple[str, Dict[str, Any]]:
    """Split ``name:key=value,...`` into the name and typed parameters.

    Raises:
        InputError: On unknown generators or malformed parameters
    """
    name, _, rest = spec.partition(":")
    name = name.strip()
    if name not in GENERATORS:
        raise InputError(f"Unknown generator '{name}', expected one of {sorted(GENERATORS)}")
    params: Dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"Malformed generator parameter '{item}' (expected key=value)")
        params[key.strip()] = _parse_value(value.strip())
    return name, params


def generate(spec: str, seed: Optional[int] = None) -> Instance:
    """Build the instance named by a ``--gen`` string; ``seed`` fills a missing seed parameter."""
    name, params = parse_generator_spec(spec)
    if seed is not None:
        params.setdefault("seed", seed)
    try:
        instance = GENERATORS[name](params)
    except (TypeError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"Bad parameters for generator '{name}': {e}")
    logger.info(f"Generated {instance.name}: {instance.system.describe()}")
    return instance
