"""
Corpus experiments at reduced size.

These sweep generated instances end to end and take noticeably longer than
the unit tests; deselect them with ``-m "not slow"``.
"""

import json
import math

import pytest

from src.cli.experiments import (
    EXPERIMENTS,
    FIG1_ALPHA_STAR,
    ONE_OVER_LN4,
    copies_bound,
    exp_copies,
    exp_merge,
    exp_priority,
    exp_randomized_guarantee,
    exp_squared_certificates,
    exp_structure,
    exp_tightness,
    remark23_ratio,
    run_experiments,
)

pytestmark = pytest.mark.slow


class TestClosedForms:
    """Test cases for the closed-form reference values."""

    def test_remark23_ratio_decreases(self):
        """Test that the tightness ratio falls towards 1/ln 4."""
        ratios = [remark23_ratio(n) for n in (1, 2, 4, 8, 64)]
        assert ratios[0] == 1
        assert all(a > b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] > ONE_OVER_LN4
        assert ratios[-1] == pytest.approx(ONE_OVER_LN4, abs=1e-2)

    def test_copies_bound(self):
        """Test the even and odd copy counts."""
        assert copies_bound(2) == pytest.approx(FIG1_ALPHA_STAR)
        assert copies_bound(4) == pytest.approx(FIG1_ALPHA_STAR)
        assert copies_bound(3) == pytest.approx(0.804738, abs=1e-6)
        assert copies_bound(3) < FIG1_ALPHA_STAR
        assert FIG1_ALPHA_STAR == pytest.approx((1 + 1 / math.sqrt(2)) / 2)


class TestExperiments:
    """Test cases for individual experiments on small corpora."""

    def test_fixed_instances(self):
        """Test the path and game experiments through the suite runner."""
        stats = run_experiments(["fig1_exact", "fig1_game"])
        assert stats.success
        assert [result.name for result in stats.results] == ["fig1_exact", "fig1_game"]
        assert json.loads(json.dumps(stats.to_dict()))["success"] is True

    def test_randomized_guarantee(self):
        """Test the 1/ln 4 guarantee on a small good-family corpus."""
        result = exp_randomized_guarantee(count=30, seed=3)
        assert result.passed, result.failures
        assert result.worst >= ONE_OVER_LN4 - 1e-9

    def test_tightness(self):
        """Test the largest tightness instance."""
        result = exp_tightness((2, 8))
        assert result.passed, result.failures
        assert result.details["n=8"]["ratio"] == pytest.approx(remark23_ratio(8), abs=1e-9)

    def test_squared_certificates(self):
        """Test certificates on a small bipartite corpus."""
        result = exp_squared_certificates(count=25, seed=1)
        assert result.passed, result.failures
        assert result.instances == 25

    def test_structure(self):
        """Test structural predicates with few samples."""
        result = exp_structure(count=4, seed=0, samples=60)
        assert result.passed, result.failures
        assert result.details["witness"]["k"] == 4

    def test_priority(self):
        """Test the priority experiment on a small corpus."""
        result = exp_priority(count=20, seed=2)
        assert result.passed, result.failures

    def test_merge(self):
        """Test simplification and merging on a few random pairs."""
        result = exp_merge(
            count=6,
            seed=0,
            deltas=(0.5,),
            cardinalities=(1, 3),
            expectation_pairs=3,
            expectation_samples=2000,
        )
        assert result.passed, result.failures
        assert result.instances == 12
        assert result.details["expectation_checks"] > 0
        assert result.details["expectation_band_misses"] <= 1

    def test_copies(self):
        """Test the copies experiment against its closed form."""
        result = exp_copies((2, 3))
        assert result.passed, result.failures
        assert result.details["K=2"] == pytest.approx(FIG1_ALPHA_STAR)

    def test_registry(self):
        """Test that every experiment is registered once."""
        assert set(EXPERIMENTS) == {
            "fig1_exact",
            "fig1_game",
            "randomized_guarantee",
            "tightness",
            "squared_certificates",
            "structure",
            "priority",
            "merge",
            "copies",
        }


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
