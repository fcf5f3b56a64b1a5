"""Checks on the build manifest."""

from pathlib import Path

import pytest

tomllib = pytest.importorskip("tomllib")

PYPROJECT = Path(__file__).resolve().parents[1] / "pyproject.toml"


class TestPytestConfig:
    """Test cases for the pytest section of pyproject.toml."""

    def setup_method(self):
        """Set up test fixtures."""
        with PYPROJECT.open("rb") as handle:
            self.config = tomllib.load(handle)

    def test_plain_run_needs_no_plugins(self):
        """Test that default options do not require pytest-cov."""
        addopts = self.config["tool"]["pytest"]["ini_options"]["addopts"]
        assert "--cov" not in addopts

    def test_coverage_source(self):
        """Test that an explicit --cov run measures the package."""
        assert self.config["tool"]["coverage"]["run"]["source"] == ["src"]

    def test_slow_marker_registered(self):
        """Test that the corpus marker is declared."""
        markers = self.config["tool"]["pytest"]["ini_options"]["markers"]
        assert any(marker.startswith("slow:") for marker in markers)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
