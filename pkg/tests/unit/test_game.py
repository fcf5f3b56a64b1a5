"""Unit tests for the simplex engine and the robustness game."""

import math
from dataclasses import replace
from fractions import Fraction

import pytest

from src.cli.generators import gen_copies, gen_fig1
from src.game.matrix_game import (
    asymptotic_deterministic_best,
    build_matrix,
    deterministic_best,
    induced_priority,
    solve_game,
    verify_solution,
)
from src.game.simplex import Constraint, LPStatus, Sense, SimplexSolver
from src.systems.families import MatchingSystem
from src.utils.errors import InputError
from src.utils.numbers import SQRT2, Surd

FIG1_ALPHA_STAR = (1 + 1 / math.sqrt(2)) / 2


class TestSimplex:
    """Test cases for SimplexSolver."""

    def setup_method(self):
        """Set up test fixtures."""
        self.constraints = [
            Constraint([1, 2], Sense.LE, 4),
            Constraint([3, 1], Sense.LE, 6),
        ]

    def test_exact_optimum(self):
        """Test an exact rational vertex optimum."""
        result = SimplexSolver(exact=True).maximize([1, 1], self.constraints)
        assert result.status is LPStatus.OPTIMAL
        assert result.x == (Fraction(8, 5), Fraction(6, 5))
        assert result.objective == Fraction(14, 5)

    def test_float_optimum(self):
        """Test the float path on the same LP."""
        result = SimplexSolver(exact=False, tolerance=1e-12).maximize([1, 1], self.constraints)
        assert result.status is LPStatus.OPTIMAL
        assert result.objective == pytest.approx(2.8)

    def test_surd_coefficients(self):
        """Test exact pivoting over Q(sqrt 2)."""
        result = SimplexSolver().maximize([1], [Constraint([SQRT2], Sense.LE, 2)])
        assert result.objective == SQRT2

    def test_equality_and_lower_bounds(self):
        """Test phase one with equality and >= rows."""
        constraints = [
            Constraint([1, 1], Sense.EQ, 1),
            Constraint([1, 0], Sense.GE, Fraction(1, 3)),
        ]
        result = SimplexSolver().maximize([0, 1], constraints)
        assert result.status is LPStatus.OPTIMAL
        assert result.x == (Fraction(1, 3), Fraction(2, 3))

    def test_infeasible(self):
        """Test detection of an empty feasible region."""
        constraints = [Constraint([1], Sense.LE, 1), Constraint([1], Sense.GE, 2)]
        assert SimplexSolver().maximize([1], constraints).status is LPStatus.INFEASIBLE

    def test_unbounded(self):
        """Test detection of an unbounded objective."""
        constraints = [Constraint([1, -1], Sense.LE, 1)]
        assert SimplexSolver().maximize([1, 0], constraints).status is LPStatus.UNBOUNDED

    def test_width_mismatch(self):
        """Test that constraint widths are validated."""
        with pytest.raises(InputError):
            SimplexSolver().maximize([1, 1], [Constraint([1], Sense.LE, 1)])


class TestRobustnessGame:
    """Test cases for building and solving the game."""

    def setup_method(self):
        """Set up test fixtures."""
        self.fig1 = gen_fig1()
        self.system = MatchingSystem(self.fig1)
        self.matrix = build_matrix(self.system, self.fig1.weights)

    def test_matrix_shape(self):
        """Test rows, columns and exact payoffs of the path."""
        assert self.matrix.rows == ({1}, {0, 2})
        assert self.matrix.cols == (1, 2)
        assert self.matrix.payoff == ((1, SQRT2 / 2), (SQRT2 / 2, 1))
        assert self.matrix.exact

    def test_full_support_rows(self):
        """Test that every matching becomes a row on request."""
        matrix = build_matrix(self.system, self.fig1.weights, maximal_only=False)
        assert len(matrix.rows) == 5

    def test_exact_game_value(self):
        """Test the exact value and the half-half strategies."""
        solution = solve_game(self.matrix)
        assert solution.exact
        assert solution.alpha_star == Surd(Fraction(1, 2), Fraction(1, 4))
        assert solution.beta == solution.alpha_star
        assert solution.alice_x == (Fraction(1, 2), Fraction(1, 2))
        assert solution.bob_y == (Fraction(1, 2), Fraction(1, 2))
        assert verify_solution(self.matrix, solution).ok

    def test_float_game_value(self):
        """Test the float path against the closed form."""
        solution = solve_game(self.matrix, exact=False)
        assert float(solution.alpha_star) == pytest.approx(FIG1_ALPHA_STAR, abs=1e-9)
        assert verify_solution(self.matrix, solution).ok

    def test_alice_distribution(self):
        """Test the exact randomized solution behind Alice's strategy."""
        alice = solve_game(self.matrix).alice
        assert alice.probability({1}) == Fraction(1, 2)
        assert alice.probability({0, 2}) == Fraction(1, 2)

    def test_verification_catches_tampering(self):
        """Test that a pure strategy cannot claim the mixed value."""
        solution = solve_game(self.matrix)
        tampered = replace(solution, alice_x=(1, 0))
        report = verify_solution(self.matrix, tampered)
        assert not report.ok
        assert any("k=2" in message for message in report.violations)

    def test_deterministic_best(self):
        """Test the best pure strategy on the path."""
        best_set, value = deterministic_best(self.matrix)
        assert best_set == {1}
        assert value == SQRT2 / 2

    def test_restrict(self):
        """Test dropping small cardinalities."""
        restricted = self.matrix.restrict(2)
        assert restricted.cols == (2,)
        assert restricted.payoff == ((SQRT2 / 2,), (1,))
        assert deterministic_best(restricted) == ({0, 2}, 1)

    def test_induced_priority(self):
        """Test Bob's strategy read as a priority distribution."""
        mu = induced_priority(solve_game(self.matrix))
        assert mu.probability(1) + mu.probability(2) == 1
        assert mu.probability(1) > mu.probability(2)

    def test_empty_matrix(self):
        """Test that a game without columns is refused."""
        with pytest.raises(InputError):
            solve_game(self.matrix.restrict(3))

    def test_two_copies(self):
        """Test the asymptotic value on two disjoint paths."""
        graph = gen_copies(2)
        matrix = build_matrix(MatchingSystem(graph), graph.weights)
        assert len(matrix.rows) == 4
        _, value = asymptotic_deterministic_best(MatchingSystem(graph), graph.weights, 2)
        assert value == Surd(Fraction(1, 2), Fraction(1, 4))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
