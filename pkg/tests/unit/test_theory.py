"""Unit tests for bit-functions, minors and the structural checks."""

from fractions import Fraction

import pytest

from src.cli.generators import LEMMA28_WEIGHTS, gen_fig1, gen_lemma28
from src.systems.base import enumerate_independent
from src.systems.families import MatchingSystem
from src.theory.bit_functions import BitFunction, sample_bit_functions
from src.theory.checkers import (
    check_2_extendible,
    check_bit_concave,
    check_bit_concave_for,
    check_extendible,
    check_good,
    check_good_sampled,
    check_theorem32,
)
from src.theory.minors import Contract, Delete, MinorSpec, Truncate, apply_minor, single_step_minors
from src.utils.errors import InputError

LEMMA28_BITS = BitFunction((1, 1, 1, 0, 0, 0))


class TestBitFunctions:
    """Test cases for BitFunction and its sampler."""

    def test_weights(self):
        """Test exact powers and the integer scaling."""
        bits = BitFunction((-1, 0, 2))
        assert bits.weights == (Fraction(1, 2), 1, 4)
        assert bits.integer_weights() == (1, 2, 8)
        assert bits.scale_exponent == -1

    def test_sampler_is_reproducible(self):
        """Test that a fixed seed gives the same functions."""
        first = list(sample_bit_functions(6, samples=25, seed=3))
        second = list(sample_bit_functions(6, samples=25, seed=3))
        assert first == second
        assert len(first) == 25
        assert all(len(bits.exponents) == 6 for bits in first)

    def test_sampler_range(self):
        """Test an empty exponent range."""
        with pytest.raises(InputError):
            list(sample_bit_functions(3, samples=1, low=2, high=1))


class TestMinorSpecs:
    """Test cases for composed minors."""

    def setup_method(self):
        """Set up test fixtures."""
        self.system = MatchingSystem(gen_fig1())

    def test_apply_and_describe(self):
        """Test a deletion followed by a truncation."""
        spec = MinorSpec().then(Delete(frozenset({1}))).then(Truncate(1))
        assert spec.describe() == "delete[1] -> truncate(1)"
        minor = apply_minor(self.system, spec)
        assert enumerate_independent(minor, maximal_only=True) == [{0}, {2}]
        assert MinorSpec().describe() == "identity"

    def test_dependent_contraction(self):
        """Test that contracting a non-matching is refused."""
        with pytest.raises(InputError):
            apply_minor(self.system, MinorSpec((Contract(frozenset({0, 1})),)))

    def test_single_step_minors(self):
        """Test one deletion and one contraction per edge plus truncations."""
        specs = single_step_minors(self.system)
        assert len(specs) == 8
        assert sum(isinstance(spec.ops[0], Truncate) for spec in specs) == 2


class TestStructuralChecks:
    """Test cases for concavity, goodness and extendibility."""

    def setup_method(self):
        """Set up test fixtures."""
        self.path = MatchingSystem(gen_fig1())
        self.explicit = gen_lemma28()

    def test_concavity_violation(self):
        """Test the first concavity violation of the explicit system."""
        result = check_bit_concave_for(self.explicit, LEMMA28_BITS)
        assert not result.holds
        assert result.witness["k"] == 2
        assert result.witness["opt"] == [0.0, 2.0, 4.0, 4.0, 5.0]

    def test_not_good(self):
        """Test the lexicographic maximum falling short at k=4."""
        result = check_good(self.explicit, LEMMA28_WEIGHTS)
        assert not result.holds
        assert result.witness == {"set": [0, 1], "k": 4, "achieved": 4.0, "opt": 5.0}
        assert not check_good(self.explicit, LEMMA28_BITS).holds

    def test_explicit_system_is_2_extendible(self):
        """Test that the counterexample is 2-extendible."""
        assert check_2_extendible(self.explicit).holds

    def test_matchings(self):
        """Test that path matchings are good and 2- but not 1-extendible."""
        assert check_good(self.path, (1, 1, 1)).holds
        assert check_good(self.path, BitFunction((0, 1, 0))).holds
        assert check_bit_concave(self.path, samples=50, seed=1).holds
        assert check_good_sampled(self.path, samples=50, seed=1).holds
        assert check_2_extendible(self.path).holds

        result = check_extendible(self.path, mu=1)
        assert not result.holds
        assert result.witness == {"X": [0, 2], "Y": [1], "y": 1}

    def test_non_bit_weights_can_fail(self):
        """Test that goodness is about bit-functions only."""
        assert not check_good(self.path, gen_fig1().weights).holds


class TestEquivalence:
    """Test cases for the four equivalent predicates."""

    def test_explicit_system_fails_all(self):
        """Test that all predicates fail together on the explicit system."""
        report = check_theorem32(
            gen_lemma28(), minor_depth=1, samples=20, seed=0, extra=[LEMMA28_BITS]
        )
        assert not report.bit_concave
        assert not report.minors_bit_concave
        assert not report.lex_optimal_in_minors
        assert not report.good
        assert report.agree
        assert "good" in report.witnesses

    def test_path_satisfies_all(self):
        """Test that all predicates hold together on path matchings."""
        report = check_theorem32(MatchingSystem(gen_fig1()), minor_depth=2, samples=40, seed=2)
        assert report.agree
        assert report.good
        assert not report.escalated
        assert report.minors_checked >= len(single_step_minors(MatchingSystem(gen_fig1())))
        assert report.to_dict()["agree"] is True


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
