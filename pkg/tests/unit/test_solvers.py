"""Unit tests for optima, OPT profiles and lexicographic maxima."""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cli.generators import LEMMA28_WEIGHTS, gen_fig1, gen_lemma28, gen_random_bipartite
from src.solvers.bipartite import max_weight_matching, successive_matchings
from src.solvers.branch_and_bound import branch_and_bound
from src.solvers.lexicographic import LexKey, greedy, lex_max, lex_max_sets, surrogate_weights
from src.solvers.optimum import SolveMethod, max_weight_at_most_k, opt_profile, use_bipartite_path
from src.systems.families import MatchingSystem
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError, ResourceLimitError
from src.utils.numbers import SQRT2


def complete_graph(n: int) -> WeightedGraph:
    edges = tuple(combinations(range(n), 2))
    return WeightedGraph(n, edges, (1,) * len(edges))


def networkx_optimum(graph: WeightedGraph) -> int:
    nx_graph = graph.to_networkx()
    matching = nx.max_weight_matching(nx_graph, weight="weight")
    return sum(nx_graph[u][v]["weight"] for u, v in matching)


class TestOptProfile:
    """Test cases for OPT profiles."""

    def setup_method(self):
        """Set up test fixtures."""
        self.fig1 = gen_fig1()
        self.system = MatchingSystem(self.fig1)

    def test_fig1_profile_is_exact(self):
        """Test the exact profile (0, sqrt 2, 2) of the path."""
        profile = opt_profile(self.system, self.fig1.weights)
        assert profile.values == (0, SQRT2, 2)
        assert profile.witness(1) == {1}
        assert profile.witness(2) == {0, 2}
        assert profile.value(5) == 2
        assert profile.is_concave()

    def test_lemma28_profile_is_not_concave(self):
        """Test the explicit system's profile and its first concavity violation."""
        profile = opt_profile(gen_lemma28(), LEMMA28_WEIGHTS)
        assert profile.values == (0, 2, 4, 4, 5)
        assert profile.concavity_violation() == 2
        assert not profile.is_concave()

    def test_max_weight_at_most_k(self):
        """Test cardinality-bounded optima on the path."""
        assert max_weight_at_most_k(self.system, self.fig1.weights, 0) == (frozenset(), 0)
        assert max_weight_at_most_k(self.system, self.fig1.weights, 1) == ({1}, SQRT2)
        assert max_weight_at_most_k(self.system, self.fig1.weights, 2) == ({0, 2}, 2)
        with pytest.raises(InputError):
            max_weight_at_most_k(self.system, self.fig1.weights, -1)

    def test_forced_bipartite_path(self):
        """Test that the forced bipartite path gives the same profile."""
        profile = opt_profile(self.system, self.fig1.weights, method=SolveMethod.BIPARTITE)
        assert profile.values == (0, SQRT2, 2)
        value = max_weight_at_most_k(self.system, self.fig1.weights, 1, method="bipartite")[1]
        assert value == SQRT2

    def test_bipartite_path_needs_bipartite_matching(self):
        """Test refusals of the bipartite path."""
        with pytest.raises(InputError):
            use_bipartite_path(MatchingSystem(complete_graph(3)), "bipartite")
        with pytest.raises(InputError):
            use_bipartite_path(gen_lemma28(), SolveMethod.BIPARTITE)

    def test_beyond_cap_without_polynomial_path(self):
        """Test that K7 has too many edges and no bipartite path."""
        system = MatchingSystem(complete_graph(7))
        with pytest.raises(ResourceLimitError):
            opt_profile(system, (1,) * 21)

    def test_large_bipartite_uses_polynomial_path(self):
        """Test a bipartite graph beyond the enumeration cap."""
        graph = gen_random_bipartite(6, 6, 0.9, seed=3)
        assert graph.num_edges > 20
        system = MatchingSystem(graph)
        assert use_bipartite_path(system)
        profile = opt_profile(system, graph.weights)
        assert profile.value(profile.rank) == networkx_optimum(graph)
        assert profile.is_concave()

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(1, 4),
        st.integers(1, 4),
        st.floats(0.2, 1.0),
        st.integers(0, 10_000),
    )
    def test_bipartite_path_matches_enumeration(self, left, right, p, seed):
        """Test both solution paths and the networkx optimum on random bipartite graphs."""
        graph = gen_random_bipartite(left, right, p, seed=seed, max_weight=20)
        system = MatchingSystem(graph)
        enumerated = opt_profile(system, graph.weights, method="enumerate")
        augmented = opt_profile(system, graph.weights, method="bipartite")
        assert enumerated.values == augmented.values
        assert enumerated.value(enumerated.rank) == networkx_optimum(graph)


class TestBipartite:
    """Test cases for successive augmenting paths."""

    def test_successive_matchings_on_fig1(self):
        """Test the best matching of each cardinality on the path."""
        results = successive_matchings(gen_fig1())
        assert results == [(frozenset(), 0), ({1}, SQRT2), ({0, 2}, 2)]

    def test_prefer_larger(self):
        """Test tie-breaking between equal-weight matchings."""
        graph = WeightedGraph(4, ((0, 1), (1, 2), (2, 3)), (1, 2, 1))
        assert max_weight_matching(graph, prefer_larger=True) == ({0, 2}, 2)
        assert max_weight_matching(graph, prefer_larger=False) == ({1}, 2)


class TestBranchAndBound:
    """Test cases for the branch-and-bound engine."""

    def test_tie_key(self):
        """Test that the tie key selects among equal optima."""
        system = MatchingSystem(gen_fig1())
        weights = (1, 2, 1)
        items, value = branch_and_bound(system, weights, tie_key=lambda s: (len(s),))
        assert (items, value) == ({0, 2}, 2)

    def test_cap(self):
        """Test the explicit cap argument."""
        with pytest.raises(ResourceLimitError):
            branch_and_bound(MatchingSystem(gen_fig1()), (1, 1, 1), cap=2)


class TestLexicographic:
    """Test cases for lexicographic maxima."""

    def setup_method(self):
        """Set up test fixtures."""
        self.system = MatchingSystem(gen_fig1())

    def test_lex_key_prefix_rule(self):
        """Test that a proper prefix compares smaller."""
        assert LexKey((2,)) < LexKey((2, 1))
        assert LexKey((2, 1, 1, 1)) < LexKey((2, 2))
        assert LexKey.of({0, 2}, (3, 1, 5)) == LexKey((5, 3))

    def test_surrogate_weights(self):
        """Test rank-based powers of the surrogate base."""
        assert surrogate_weights(self.system, (1, 2, 2)) == (4, 16, 16)

    def test_lex_max_on_fig1(self):
        """Test that the heavier leading weight wins, then the longer sequence."""
        assert lex_max(self.system, (1, SQRT2, 1)) == {1}
        assert lex_max(self.system, (1, 1, 1)) == {0, 2}

    def test_lex_max_on_lemma28(self):
        """Test the unique lexicographic maximum of the explicit system."""
        system = gen_lemma28()
        assert lex_max(system, LEMMA28_WEIGHTS) == {0, 1}
        assert lex_max_sets(system, LEMMA28_WEIGHTS) == [{0, 1}]

    def test_lex_max_bipartite_path(self):
        """Test the surrogate maximisation on the bipartite path."""
        assert lex_max(self.system, (1, 1, 1), method="bipartite") == {0, 2}

    def test_greedy(self):
        """Test the greedy baseline."""
        assert greedy(self.system, (1, 3, 2)) == {1}
        assert greedy(self.system, (3, 1, 2)) == {0, 2}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
