"""Unit tests for exact arithmetic over Q(sqrt 2)."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.utils.numbers import (
    SQRT2,
    Surd,
    div,
    exact_log2,
    floor_log2,
    is_exact,
    normalize,
    power_of_two,
    split_log2,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


class TestSurd:
    """Test cases for Surd arithmetic and ordering."""

    def test_square_root_squares_to_two(self):
        """Test that sqrt 2 times itself is exactly 2."""
        assert SQRT2 * SQRT2 == 2
        assert normalize(SQRT2 * SQRT2) == 2
        assert isinstance(normalize(SQRT2 * SQRT2), int)

    def test_mixed_arithmetic(self):
        """Test int and Fraction operands on both sides."""
        assert (1 + SQRT2) * (1 - SQRT2) == -1
        assert 1 / SQRT2 == SQRT2 / 2
        assert Fraction(1, 2) * SQRT2 == Surd(0, Fraction(1, 2))
        assert 3 - SQRT2 == Surd(3, -1)
        assert (SQRT2 ** 3) == Surd(0, 2)
        assert (SQRT2 ** -2) == Fraction(1, 2)

    def test_ordering(self):
        """Test the exact total order against rational bounds."""
        assert Fraction(141, 100) < SQRT2 < Fraction(142, 100)
        assert 3 - 2 * SQRT2 > 0
        assert 2 * SQRT2 - 3 < 0
        assert -SQRT2 < -1
        assert max(SQRT2, Fraction(3, 2)) == Fraction(3, 2)
        assert abs(1 - SQRT2) == SQRT2 - 1

    def test_float_contamination(self):
        """Test that combining with a float gives a float."""
        value = SQRT2 + 0.5
        assert isinstance(value, float)
        assert value == pytest.approx(math.sqrt(2) + 0.5)
        assert SQRT2 > 1.41

    def test_float_coefficients_rejected(self):
        """Test that float coefficients are refused."""
        with pytest.raises(TypeError):
            Surd(0.5, 1)

    def test_division_by_zero(self):
        """Test division by an exact zero."""
        with pytest.raises(ZeroDivisionError):
            SQRT2 / Surd(0, 0)

    def test_hash_matches_rationals(self):
        """Test that rational surds hash like their Fraction."""
        assert hash(Surd(3, 0)) == hash(Fraction(3))
        assert len({SQRT2, Surd(0, 1), Surd(1, 0), 1}) == 2

    @given(rationals, rationals, rationals, rationals)
    def test_field_operations_are_exact(self, a, b, c, d):
        """Test that addition and multiplication invert exactly."""
        x, y = Surd(a, b), Surd(c, d)
        assert (x + y) - y == x
        if y:
            assert (x * y) / y == x

    @given(rationals, rationals, rationals, rationals)
    def test_order_agrees_with_floats(self, a, b, c, d):
        """Test the exact order against float evaluation away from ties."""
        x, y = Surd(a, b), Surd(c, d)
        if float(x) < float(y) - 1e-6:
            assert x < y
        if float(x) > float(y) + 1e-6:
            assert x > y


class TestHelpers:
    """Test cases for normalisation, division and logarithms."""

    def test_normalize(self):
        """Test collapsing to the simplest type."""
        assert isinstance(normalize(Surd(3, 0)), int)
        assert normalize(Surd(Fraction(1, 2), 0)) == Fraction(1, 2)
        assert isinstance(normalize(Fraction(4, 2)), int)
        assert normalize(SQRT2) is SQRT2

    def test_div(self):
        """Test exact division and its float fallback."""
        assert div(1, 3) == Fraction(1, 3)
        assert isinstance(div(4, 2), int)
        assert div(1.0, 2) == 0.5
        assert div(SQRT2, SQRT2) == 1
        assert div(2, SQRT2) == SQRT2
        with pytest.raises(ZeroDivisionError):
            div(1, 0)

    def test_is_exact(self):
        """Test exact-type detection."""
        assert is_exact(1) and is_exact(Fraction(1, 3)) and is_exact(SQRT2)
        assert not is_exact(0.5)

    def test_power_of_two(self):
        """Test integer and fractional powers."""
        assert power_of_two(3) == 8
        assert power_of_two(-3) == Fraction(1, 8)

    def test_exact_log2(self):
        """Test recognised and unrecognised logarithms."""
        assert exact_log2(8) == 3
        assert exact_log2(Fraction(1, 4)) == -2
        assert exact_log2(SQRT2) == Fraction(1, 2)
        assert exact_log2(2 * SQRT2) == Fraction(3, 2)
        assert exact_log2(0.25) == -2
        assert exact_log2(3) is None
        assert exact_log2(0.3) is None
        assert exact_log2(1 + SQRT2) is None

    def test_floor_log2(self):
        """Test the exact floor of the logarithm."""
        assert floor_log2(1) == 0
        assert floor_log2(1023) == 9
        assert floor_log2(1024) == 10
        assert floor_log2(Fraction(3, 4)) == -1
        assert floor_log2(SQRT2) == 0
        assert floor_log2(2 ** 200 + 1) == 200
        with pytest.raises(ValueError):
            floor_log2(0)

    def test_split_log2(self):
        """Test the integer and fractional parts of the logarithm."""
        assert split_log2(SQRT2, 40) == (0, Fraction(1, 2), True)
        assert split_log2(Fraction(1, 8), 40) == (-3, Fraction(0), True)
        q, frac, exact = split_log2(3, 40)
        assert q == 1 and not exact
        assert float(frac) == pytest.approx(math.log2(3) - 1, abs=1e-11)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
