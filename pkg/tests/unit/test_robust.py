"""Unit tests for robustness evaluation, randomized rounding and priorities."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cli.generators import LEMMA28_WEIGHTS, gen_fig1, gen_lemma28, gen_random, gen_remark23
from src.robust.evaluation import randomized_robustness, robustness
from src.robust.priority import (
    PriorityDistribution,
    mu_to_priorities,
    priorities_to_mu,
    priority_best_in_support,
    priority_optimum,
    priority_value,
    random_priority_distribution,
)
from src.robust.rounding import randomized_robust, rounded_weights
from src.robust.solution import RandomizedSolution
from src.robust.squared import squared_weight_solution
from src.systems.families import MatchingSystem
from src.utils.errors import InputError
from src.utils.numbers import SQRT2, Surd, floor_log2, power_of_two

ONE_OVER_LN4 = 1 / math.log(4)
HALF = Fraction(1, 2)


class TestRobustness:
    """Test cases for deterministic and randomized robustness ratios."""

    def setup_method(self):
        """Set up test fixtures."""
        self.fig1 = gen_fig1()
        self.system = MatchingSystem(self.fig1)

    def test_outer_edges(self):
        """Test the outer matching: worst at k=1 with ratio 1/sqrt 2."""
        report = robustness(self.system, self.fig1.weights, {0, 2})
        assert report.alpha == SQRT2 / 2
        assert report.argmin_k == 1
        assert report.ratio(2) == 1

    def test_middle_edge(self):
        """Test the middle edge: worst at k=2 with ratio 1/sqrt 2."""
        report = robustness(self.system, self.fig1.weights, {1})
        assert report.alpha == SQRT2 / 2
        assert report.argmin_k == 2
        assert report.ratio(1) == 1

    def test_min_k(self):
        """Test that cardinalities below min_k are ignored."""
        report = robustness(self.system, self.fig1.weights, {0, 2}, min_k=2)
        assert [row.k for row in report.per_k] == [2]
        assert report.alpha == 1

    def test_dependent_set(self):
        """Test that a non-matching is rejected."""
        with pytest.raises(InputError):
            robustness(self.system, self.fig1.weights, {0, 1})

    def test_randomized_report(self):
        """Test the expected ratio of the half-half mixture."""
        solution = RandomizedSolution.from_pairs([({1}, HALF), ({0, 2}, HALF)])
        report = randomized_robustness(self.system, self.fig1.weights, solution)
        expected = Surd(HALF, Fraction(1, 4))
        assert report.ratio(1) == expected
        assert report.ratio(2) == expected
        assert report.alpha == expected

    def test_report_serialises(self):
        """Test the report dictionary."""
        data = robustness(self.system, self.fig1.weights, {1}).to_dict()
        assert data["argmin_k"] == 2
        assert data["alpha"] == pytest.approx(1 / math.sqrt(2))
        assert len(data["per_k"]) == 2


class TestRounding:
    """Test cases for power-of-two rounding."""

    def setup_method(self):
        """Set up test fixtures."""
        self.fig1 = gen_fig1()
        self.system = MatchingSystem(self.fig1)

    def test_rounded_weights(self):
        """Test rounding at several thresholds."""
        assert rounded_weights((1, SQRT2, 3), Fraction(1, 4)) == (HALF, 1, 2)
        assert rounded_weights((1, SQRT2, 3), 0) == (1, 1, 2)
        assert rounded_weights((1, SQRT2, 3), 1) == (HALF, HALF, 1)

    def test_rounded_weights_validation(self):
        """Test out-of-range thresholds and zero weights."""
        with pytest.raises(InputError):
            rounded_weights((1,), Fraction(3, 2))
        with pytest.raises(InputError):
            rounded_weights((0,), HALF)

    @settings(max_examples=100, deadline=None)
    @given(
        st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=1000),
        st.fractions(min_value=0, max_value=1, max_denominator=10_000).filter(lambda x: x < 1),
    )
    def test_rounded_weights_sandwich(self, weight, x):
        """Test 2**x * w[x] <= w < 2**(x+1) * w[x] on rational weights."""
        (rounded,) = rounded_weights((weight,), x)
        exponent = floor_log2(rounded)
        assert rounded == power_of_two(exponent)
        log_weight = math.log2(weight.numerator) - math.log2(weight.denominator)
        assert exponent + float(x) <= log_weight + 1e-9
        assert log_weight < exponent + float(x) + 1 + 1e-9

    @settings(max_examples=50, deadline=None)
    @given(
        st.integers(-6, 6),
        st.fractions(min_value=0, max_value=1, max_denominator=10_000).filter(lambda x: x < 1),
    )
    def test_rounded_weights_sandwich_sqrt2(self, j, x):
        """Test the exact exponent for weights sqrt(2) * 2**j."""
        (rounded,) = rounded_weights((SQRT2 * power_of_two(j),), x)
        assert rounded == power_of_two(math.floor(j + HALF - x))

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(3, 6),
        st.floats(0.3, 0.9),
        st.integers(0, 10_000),
        st.sampled_from([4, HALF, Fraction(1, 8)]),
    )
    def test_distribution_invariant_under_power_of_two_scaling(self, n, p, seed, factor):
        """Test that support sets and probabilities ignore a power-of-two factor."""
        graph = gen_random(n, p, seed=seed, max_weight=20)
        if graph.num_edges == 0 or graph.num_edges > 10:
            return
        system = MatchingSystem(graph)
        scaled_weights = tuple(w * factor for w in graph.weights)
        original = randomized_robust(system, graph.weights)
        scaled = randomized_robust(system, scaled_weights)
        assert {s: original.probability(s) for s in original.sets} == {
            s: scaled.probability(s) for s in scaled.sets
        }

    def test_fig1_distribution(self):
        """Test the two support sets with probability one half each."""
        solution = randomized_robust(self.system, self.fig1.weights)
        assert len(solution.support) == 2
        assert solution.probability({1}) == HALF
        assert solution.probability({0, 2}) == HALF
        report = randomized_robustness(self.system, self.fig1.weights, solution)
        assert report.alpha == Surd(HALF, Fraction(1, 4))

    def test_resolution_collapses_support(self):
        """Test that a unit grid leaves a single interval."""
        solution = randomized_robust(self.system, self.fig1.weights, resolution=1)
        assert solution.sets == [frozenset({0, 2})]
        with pytest.raises(InputError):
            randomized_robust(self.system, self.fig1.weights, resolution=0)

    def test_zero_weights(self):
        """Test that zero-weight edges never appear and all-zero input is refused."""
        solution = randomized_robust(self.system, (0, 1, 1))
        assert all(0 not in items for items in solution.sets)
        with pytest.raises(InputError):
            randomized_robust(self.system, (0, 0, 0))

    @pytest.mark.parametrize("n", [2, 4])
    def test_tightness_family(self, n):
        """Test the closed-form ratio at k=1 on the tightness family."""
        graph = gen_remark23(n)
        system = MatchingSystem(graph)
        solution = randomized_robust(system, graph.weights)
        ratio = float(randomized_robustness(system, graph.weights, solution).ratio(1))
        closed_form = sum(2 ** (-j / n) for j in range(n)) / n
        assert ratio == pytest.approx(closed_form, abs=1e-9)
        assert ratio >= ONE_OVER_LN4

    @settings(max_examples=30, deadline=None)
    @given(st.integers(3, 6), st.floats(0.3, 0.9), st.integers(0, 10_000))
    def test_guarantee_on_matchings(self, n, p, seed):
        """Test the 1/ln 4 guarantee on random matching instances."""
        graph = gen_random(n, p, seed=seed, max_weight=20)
        if graph.num_edges == 0 or graph.num_edges > 10:
            return
        system = MatchingSystem(graph)
        solution = randomized_robust(system, graph.weights)
        report = randomized_robustness(system, graph.weights, solution)
        assert float(report.alpha) >= ONE_OVER_LN4 - 1e-9


class TestSquared:
    """Test cases for the squared-weight solution."""

    def test_fig1_tie_prefers_larger(self):
        """Test that the tie between {1} and {0, 2} goes to the larger set."""
        system = MatchingSystem(gen_fig1())
        assert squared_weight_solution(system, gen_fig1().weights) == {0, 2}

    def test_robustness_bound(self):
        """Test the 1/sqrt 2 bound on a random instance."""
        graph = gen_random(6, 0.5, seed=11, max_weight=20)
        system = MatchingSystem(graph)
        chosen = squared_weight_solution(system, graph.weights)
        report = robustness(system, graph.weights, chosen)
        assert float(report.alpha) >= 1 / math.sqrt(2) - 1e-9


class TestRandomizedSolution:
    """Test cases for RandomizedSolution validation."""

    def test_probabilities_must_sum_to_one(self):
        """Test rejection of unnormalised and float probabilities."""
        with pytest.raises(InputError):
            RandomizedSolution(((frozenset({0}), HALF),))
        with pytest.raises(InputError):
            RandomizedSolution(((frozenset({0}), 1.0),))
        with pytest.raises(InputError):
            RandomizedSolution(())

    def test_from_pairs_merges(self):
        """Test merging of repeated sets."""
        solution = RandomizedSolution.from_pairs([({0}, HALF), ([0], HALF)])
        assert solution.support == ((frozenset({0}), Fraction(1)),)

    def test_from_approximate(self):
        """Test rounding of irrational weights onto a grid."""
        solution = RandomizedSolution.from_approximate([({0}, SQRT2), ({1}, SQRT2)], bits=20)
        assert solution.probability({0}) == HALF

    def test_dict_document(self):
        """Test the dictionary document and its parser."""
        solution = RandomizedSolution.from_pairs([({1}, Fraction(1, 3)), ({0, 2}, Fraction(2, 3))])
        data = solution.to_dict()
        assert data["support"][0] == {"set": [1], "prob": {"num": 1, "den": 3}}
        assert RandomizedSolution.from_dict(data) == solution
        with pytest.raises(InputError):
            RandomizedSolution.from_dict({"support": [{"set": [0]}]})


class TestPriority:
    """Test cases for priority distributions and objectives."""

    def setup_method(self):
        """Set up test fixtures."""
        self.fig1 = gen_fig1()
        self.system = MatchingSystem(self.fig1)

    def test_validation(self):
        """Test that invalid distributions are refused."""
        with pytest.raises(InputError):
            PriorityDistribution(((1, HALF),))
        with pytest.raises(InputError):
            PriorityDistribution(((0, 1),))
        with pytest.raises(InputError):
            PriorityDistribution(((1, Fraction(3, 2)), (2, -HALF)))

    def test_duplicates_merge(self):
        """Test that repeated cardinalities add up."""
        mu = PriorityDistribution(((2, HALF), (1, Fraction(1, 4)), (2, Fraction(1, 4))))
        assert mu.mu == ((1, Fraction(1, 4)), (2, Fraction(3, 4)))
        assert mu.max_k == 2
        assert mu.probability(3) == 0

    def test_priority_value(self):
        """Test the expected top-k weight."""
        assert priority_value({0, 2}, self.fig1.weights, PriorityDistribution.point_mass(1)) == 1
        assert priority_value({0, 2}, self.fig1.weights, PriorityDistribution.point_mass(2)) == 2
        mixed = PriorityDistribution.from_mapping({1: HALF, 2: HALF})
        assert priority_value({1}, self.fig1.weights, mixed) == SQRT2

    def test_priority_optimum(self):
        """Test brute-force optima for point masses."""
        assert priority_optimum(self.system, self.fig1.weights, PriorityDistribution.point_mass(1)) == (
            {1},
            SQRT2,
        )
        assert priority_optimum(self.system, self.fig1.weights, PriorityDistribution.point_mass(2)) == (
            {0, 2},
            2,
        )

    def test_best_in_support(self):
        """Test selection from the rounding distribution."""
        solution = randomized_robust(self.system, self.fig1.weights)
        mu = PriorityDistribution.point_mass(2)
        assert priority_best_in_support(solution, self.fig1.weights, mu) == {0, 2}

    def test_priorities_round_trip(self):
        """Test conversion between priority coefficients and distributions."""
        mu, scale = priorities_to_mu((3, 2, 0))
        assert scale == 3
        assert mu.mu == ((1, Fraction(1, 3)), (2, Fraction(2, 3)))
        assert mu_to_priorities(mu) == (1, Fraction(2, 3))
        with pytest.raises(InputError):
            priorities_to_mu((1, 2))
        with pytest.raises(InputError):
            priorities_to_mu((0,))

    def test_random_distribution(self):
        """Test that sampled distributions are exact and normalised."""
        rng = np.random.default_rng(5)
        for _ in range(20):
            mu = random_priority_distribution(4, rng)
            assert sum(p for _, p in mu.mu) == 1
            assert 1 <= mu.max_k <= 4

    def test_priority_guarantee_on_explicit_system(self):
        """Test the best support set against the optimum on the bundled system."""
        system, weights = gen_lemma28(), LEMMA28_WEIGHTS
        solution = randomized_robust(system, weights)
        mu = PriorityDistribution.point_mass(2)
        chosen = priority_best_in_support(solution, weights, mu)
        _, best = priority_optimum(system, weights, mu)
        assert priority_value(chosen, weights, mu) == best


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
