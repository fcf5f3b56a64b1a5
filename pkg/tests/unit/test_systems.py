"""Unit tests for graphs, independence systems and their minors."""

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cli.generators import gen_fig1, gen_lemma28
from src.systems.base import (
    enumerate_independent,
    max_independent_size,
    order_by_weight,
    prefix_weights,
    set_weight,
    top_k,
)
from src.systems.factory import SystemKind, make_system
from src.systems.families import (
    BMatchingSystem,
    ExplicitSystem,
    MatchingSystem,
    MatroidIntersection,
    PartitionMatroid,
    UniformMatroid,
)
from src.systems.graph import WeightedGraph
from src.systems.minors import ContractionMinor, DeletionMinor, TruncationMinor
from src.utils.errors import InputError, ResourceLimitError
from src.utils.numbers import SQRT2


@st.composite
def small_graphs(draw, max_vertices=6, max_edges=8):
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=max_edges,
        )
    )
    edges = sorted({(min(u, v), max(u, v)) for u, v in pairs if u != v})
    weights = draw(st.lists(st.integers(1, 20), min_size=len(edges), max_size=len(edges)))
    return WeightedGraph(n, tuple(edges), tuple(weights))


class TestWeightedGraph:
    """Test cases for WeightedGraph validation."""

    def test_rejects_loops(self):
        """Test that loops are refused."""
        with pytest.raises(InputError):
            WeightedGraph(2, ((1, 1),), (1,))

    def test_rejects_duplicates(self):
        """Test that parallel edges are refused in either orientation."""
        with pytest.raises(InputError):
            WeightedGraph(3, ((0, 1), (1, 0)), (1, 2))

    def test_rejects_out_of_range_vertices(self):
        """Test vertex ids beyond n."""
        with pytest.raises(InputError):
            WeightedGraph(2, ((0, 2),), (1,))

    def test_rejects_bad_weights(self):
        """Test negative, non-finite and miscounted weights."""
        with pytest.raises(InputError):
            WeightedGraph(2, ((0, 1),), (-1,))
        with pytest.raises(InputError):
            WeightedGraph(2, ((0, 1),), (math.nan,))
        with pytest.raises(InputError):
            WeightedGraph(2, ((0, 1),), (1, 2))

    def test_incidence_and_bipartition(self):
        """Test incidence lists and 2-colouring of the path."""
        graph = gen_fig1()
        assert graph.incidence[1] == [0, 1]
        assert graph.other_end(1, 2) == 1
        assert graph.is_bipartite()
        left, right = graph.bipartition()
        assert sorted(left + right) == [0, 1, 2, 3]

    def test_triangle_is_not_bipartite(self):
        """Test that an odd cycle has no bipartition."""
        triangle = WeightedGraph(3, ((0, 1), (1, 2), (0, 2)), (1, 1, 1))
        assert not triangle.is_bipartite()
        with pytest.raises(InputError):
            triangle.bipartition()


class TestFamilies:
    """Test cases for the concrete system families."""

    def setup_method(self):
        """Set up test fixtures."""
        self.path = MatchingSystem(gen_fig1())
        self.star = WeightedGraph(4, ((0, 1), (0, 2), (0, 3)), (1, 1, 1))

    def test_matching_independence(self):
        """Test matchings on the four-vertex path."""
        assert self.path.is_independent({0, 2})
        assert not self.path.is_independent({0, 1})
        assert self.path.is_independent(set())
        with pytest.raises(InputError):
            self.path.is_independent({3})

    def test_matching_enumeration(self):
        """Test enumeration order and maximal sets."""
        sets = enumerate_independent(self.path)
        assert sets == [frozenset(), {0}, {1}, {2}, {0, 2}]
        assert enumerate_independent(self.path, maximal_only=True) == [{1}, {0, 2}]
        assert max_independent_size(self.path) == 2

    def test_enumeration_cap(self):
        """Test that the cap is enforced."""
        with pytest.raises(ResourceLimitError):
            enumerate_independent(self.path, cap=2)

    def test_b_matching(self):
        """Test degree capacities on a star."""
        system = BMatchingSystem(self.star, (2, 1, 1, 1))
        assert system.is_independent({0, 1})
        assert not system.is_independent({0, 1, 2})
        with pytest.raises(InputError):
            BMatchingSystem(self.star, (2, 1))

    def test_uniform_and_partition(self):
        """Test the two matroid families."""
        uniform = UniformMatroid(4, 2)
        assert uniform.is_independent({0, 3})
        assert not uniform.is_independent({0, 1, 2})

        partition = PartitionMatroid(4, [[0, 1], [2, 3]], [1, 2])
        assert partition.is_independent({0, 2, 3})
        assert not partition.is_independent({0, 1})
        with pytest.raises(InputError):
            PartitionMatroid(4, [[0, 1], [2]], [1, 1])

    def test_matroid_intersection(self):
        """Test intersection of a uniform and a partition matroid."""
        system = MatroidIntersection(
            UniformMatroid(4, 2), PartitionMatroid(4, [[0, 1], [2, 3]], [1, 2])
        )
        assert system.is_independent({0, 2})
        assert not system.is_independent({2, 3, 0})
        assert not system.is_independent({0, 1})
        with pytest.raises(InputError):
            MatroidIntersection(UniformMatroid(3, 1), UniformMatroid(4, 1))

    def test_explicit_system(self):
        """Test the bundled explicit system."""
        system = gen_lemma28()
        assert system.is_independent({0, 4, 5})
        assert system.is_independent({2, 3})
        assert not system.is_independent({0, 2})
        assert len(enumerate_independent(system, maximal_only=True)) == 4
        assert system.labels[0] == "a1"

    def test_explicit_system_validation(self):
        """Test nested bases and out-of-range elements."""
        with pytest.raises(InputError):
            ExplicitSystem(3, [[0], [0, 1]])
        with pytest.raises(InputError):
            ExplicitSystem(2, [[0, 5]])

    @settings(max_examples=40, deadline=None)
    @given(small_graphs())
    def test_downward_closed(self, graph):
        """Test that every subset of an enumerated matching is a matching."""
        system = MatchingSystem(graph)
        for items in enumerate_independent(system, maximal_only=True):
            for size in range(len(items)):
                for subset in combinations(sorted(items), size):
                    assert system.is_independent(subset)


class TestMinors:
    """Test cases for deletion, contraction and truncation views."""

    def setup_method(self):
        """Set up test fixtures."""
        self.path = MatchingSystem(gen_fig1())

    def test_deletion(self):
        """Test that deleted elements drop out."""
        minor = DeletionMinor(self.path, {1})
        assert minor.elements == (0, 2)
        assert not minor.is_independent({1})
        assert enumerate_independent(minor, maximal_only=True) == [{0, 2}]

    def test_contraction(self):
        """Test contraction of an edge."""
        minor = ContractionMinor(self.path, {0})
        assert minor.elements == (1, 2)
        assert minor.is_independent({2})
        assert not minor.is_independent({1})
        assert not minor.is_independent({0})

    def test_contracting_dependent_set(self):
        """Test that only independent sets can be contracted."""
        with pytest.raises(InputError):
            ContractionMinor(self.path, {0, 1})

    def test_truncation(self):
        """Test cardinality truncation."""
        minor = TruncationMinor(self.path, 1)
        assert minor.is_independent({1})
        assert not minor.is_independent({0, 2})
        with pytest.raises(InputError):
            TruncationMinor(self.path, -1)


class TestSetHelpers:
    """Test cases for weight-ordered helpers."""

    def test_order_and_top_k(self):
        """Test tie-breaking toward the smaller id."""
        weights = (1, 2, 2)
        assert order_by_weight(range(3), weights) == [1, 2, 0]
        assert top_k(range(3), weights, 2) == {1, 2}
        assert top_k(range(3), weights, 0) == frozenset()
        with pytest.raises(InputError):
            top_k(range(3), weights, -1)

    def test_weights_of_sets(self):
        """Test exact set weights and prefix sums."""
        weights = (1, SQRT2, 1)
        assert set_weight({0, 1}, weights) == 1 + SQRT2
        assert prefix_weights({0, 1, 2}, weights) == [0, SQRT2, SQRT2 + 1, SQRT2 + 2]


class TestFactory:
    """Test cases for make_system."""

    def test_known_kinds(self):
        """Test construction by kind name and enum."""
        graph = gen_fig1()
        assert isinstance(make_system("matching", graph=graph), MatchingSystem)
        system = make_system(SystemKind.B_MATCHING, graph=graph, capacities=(1, 2, 2, 1))
        assert isinstance(system, BMatchingSystem)
        explicit = make_system("explicit", ground_size=2, bases=[[0], [1]])
        assert explicit.is_independent({1})

    def test_unknown_kind(self):
        """Test unknown kinds and missing parameters."""
        with pytest.raises(InputError):
            make_system("hypergraph")
        with pytest.raises(InputError):
            make_system("matching")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
