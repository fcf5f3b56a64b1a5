"""Shared fixtures: the small named instances most tests start from."""

import pytest

from src.cli.generators import LEMMA28_WEIGHTS, gen_fig1, gen_lemma28
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph


def _path_graph(weights) -> WeightedGraph:
    """Path 0-1-2-...; edge ``i`` joins vertices ``i`` and ``i + 1``."""
    edges = tuple((i, i + 1) for i in range(len(weights)))
    return WeightedGraph(len(weights) + 1, edges, tuple(weights))


@pytest.fixture
def fig1():
    return gen_fig1()


@pytest.fixture
def fig1_system(fig1):
    return MatchingSystem(fig1)


@pytest.fixture
def lemma28():
    return gen_lemma28(), LEMMA28_WEIGHTS


@pytest.fixture
def path_graph():
    return _path_graph
