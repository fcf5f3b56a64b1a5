"""Unit tests for squared-weight duals and top-k certificates."""

import math

import pytest

from src.certify.certificate import build_certificate, certify_all, verify_certificate
from src.certify.dual import squared_matching_dual
from src.cli.generators import gen_fig1, gen_random_bipartite
from src.systems.graph import WeightedGraph
from src.utils.errors import InputError


class TestSquaredDual:
    """Test cases for squared_matching_dual."""

    def test_fig1_dual(self):
        """Test the unique optimal dual of the path."""
        matching, dual = squared_matching_dual(gen_fig1())
        assert matching == {0, 2}
        assert dual.squares == (0, 1, 1, 0)
        assert dual.total() == 2
        assert dual.y == (0.0, 1.0, 1.0, 0.0)

    def test_non_bipartite(self):
        """Test that odd cycles are refused."""
        triangle = WeightedGraph(3, ((0, 1), (1, 2), (0, 2)), (1, 2, 3))
        with pytest.raises(InputError):
            squared_matching_dual(triangle)


class TestCertificates:
    """Test cases for building and checking certificates."""

    def setup_method(self):
        """Set up test fixtures."""
        self.graph = gen_fig1()
        self.matching, self.dual = squared_matching_dual(self.graph)

    def test_single_certificate(self):
        """Test the k=1 certificate of the path."""
        certificate = build_certificate(self.graph, self.graph.weights, self.matching, self.dual, 1)
        assert certificate.z_star == pytest.approx(math.sqrt(2))
        assert certificate.scale == 1.0
        assert certificate.edges == (0,)
        check = verify_certificate(self.graph, self.graph.weights, self.matching, certificate)
        assert check.feasible
        assert check.bound_holds
        assert check.value == pytest.approx(math.sqrt(2))

    def test_k_out_of_range(self):
        """Test cardinalities outside 1..|M|."""
        for k in (0, 3):
            with pytest.raises(InputError):
                build_certificate(self.graph, self.graph.weights, self.matching, self.dual, k)

    def test_not_a_matching(self):
        """Test that the certified set must be a matching."""
        with pytest.raises(InputError):
            build_certificate(self.graph, self.graph.weights, {0, 1}, self.dual, 1)

    def test_certify_all_fig1(self):
        """Test both records of the path."""
        records = certify_all(self.graph)
        assert [record["k"] for record in records] == [1, 2]
        assert all(record["feasible"] and record["bound_holds"] for record in records)
        assert records[0]["ratio_bound"] == pytest.approx(1 / math.sqrt(2))
        assert records[0]["value"] == pytest.approx(math.sqrt(2))
        assert records[1]["ratio_bound"] == pytest.approx(1.0)

    def test_certify_all_random_bipartite(self):
        """Test every record on a random bipartite instance."""
        graph = gen_random_bipartite(4, 4, 0.7, seed=1, max_weight=20)
        for record in certify_all(graph):
            assert record["bound_holds"]
            assert record["ratio_bound"] >= 1 / math.sqrt(2) - 1e-9

    def test_certify_all_non_bipartite(self):
        """Test that certify_all refuses odd cycles."""
        triangle = WeightedGraph(3, ((0, 1), (1, 2), (0, 2)), (1, 1, 1))
        with pytest.raises(InputError):
            certify_all(triangle)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
