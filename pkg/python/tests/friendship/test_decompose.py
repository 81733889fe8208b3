"""Tests for tensorization, clique decomposition and the Hall comparison."""

import itertools

import numpy as np
import pytest
from multimatrix.core import BinaryMultimatrix, Shape
from multimatrix.det import find_nonzero_monomial
from multimatrix.exceptions import InputError
from multimatrix.friendship import (
    Decomposition,
    PartitionedGraph,
    Verdict,
    check_friendship_theorem,
    clique_decomposition,
    hall_condition,
    tensorize,
    verify_decomposition,
)

TRIPARTITE_PAIRS = [
    (u, v)
    for a, b in itertools.combinations([(1, 2), (3, 4), (5, 6)], 2)
    for u in a
    for v in b
]


def tripartite(mask):
    return PartitionedGraph(
        [[1, 2], [3, 4], [5, 6]],
        [e for bit, e in enumerate(TRIPARTITE_PAIRS) if mask >> bit & 1],
    )


def brute_force_decomposable(g):
    """Two disjoint triangles a1-b-c and a2-b'-c'."""
    for b, c in itertools.product(itertools.permutations((3, 4)), itertools.permutations((5, 6))):
        triangles = [(1, b[0], c[0]), (2, b[1], c[1])]
        if all(g.has_edge(u, v) for t in triangles for u, v in itertools.combinations(t, 2)):
            return True
    return False


class TestTensorize:
    """Graph to multimatrix."""

    def test_two_parts_is_acquaintance_matrix(self):
        """n = 2: cell (i, j) is 1 iff girl i knows boy j."""
        rows = [[1, 0, 1], [0, 1, 1], [0, 0, 1]]
        m = tensorize(PartitionedGraph.from_marriage(rows))
        assert m.array.astype(int).tolist() == rows

    def test_complete_is_all_ones(self, complete_tripartite):
        """Every transversal of a complete graph is a clique."""
        assert tensorize(complete_tripartite) == BinaryMultimatrix.ones(Shape(3, 2))

    def test_edgeless_is_all_zero(self):
        """No edges, no cliques."""
        g = PartitionedGraph([[1, 2], [3, 4], [5, 6]])
        assert tensorize(g) == BinaryMultimatrix.zeros(Shape(3, 2))

    def test_hexagon_has_no_triangle(self, hexagon):
        """The hexagon tensorizes to all zeros."""
        assert tensorize(hexagon).count() == 0

    def test_rejects_unequal_parts(self):
        """Friendship graphs have equal parts."""
        with pytest.raises(InputError, match="equal non-zero size"):
            tensorize(PartitionedGraph([[1, 2], [3]], [(1, 3)]))


class TestCliqueDecomposition:
    """Partition into disjoint n-cliques."""

    def test_complete_tripartite(self, complete_tripartite):
        """K_{2,2,2} splits into two triangles."""
        d = clique_decomposition(complete_tripartite)
        assert d is not None
        assert d.sets == ((1, 3, 5), (2, 4, 6))

    def test_hexagon_is_not_decomposable(self, hexagon):
        """No triangle, no decomposition."""
        assert clique_decomposition(hexagon) is None

    def test_two_parts_is_perfect_matching(self):
        """n = 2 decompositions are perfect matchings."""
        g = PartitionedGraph.from_marriage([[0, 1], [1, 1]])
        d = clique_decomposition(g)
        assert d is not None
        assert d.sets == ((1, 4), (2, 3))

    def test_verifier_rejects_bad_sets(self, complete_tripartite):
        """Overlapping sets are caught."""
        with pytest.raises(AssertionError, match="exactly once"):
            verify_decomposition(complete_tripartite, Decomposition(((1, 3, 5), (1, 4, 6))))

    def test_verifier_rejects_non_clique(self, hexagon):
        """Sets must be cliques."""
        with pytest.raises(AssertionError, match="not a clique"):
            verify_decomposition(hexagon, Decomposition(((1, 3, 5), (2, 4, 6))))

    def test_all_tripartite_graphs(self):
        """All 2^12 tripartite k = 2 graphs: monomials and brute force agree."""
        for mask in range(1 << len(TRIPARTITE_PAIRS)):
            g = tripartite(mask)
            d = clique_decomposition(g)
            assert (d is not None) == (find_nonzero_monomial(tensorize(g)) is not None)
            assert (d is not None) == brute_force_decomposable(g), mask
            if d is not None:
                verify_decomposition(g, d)
                assert hall_condition(g).holds, "decomposable graphs satisfy Hall"

    def test_all_bipartite_graphs(self):
        """All 2^4 bipartite k = 2 graphs follow classical Hall."""
        for mask in range(16):
            rows = [[mask >> 3 & 1, mask >> 2 & 1], [mask >> 1 & 1, mask & 1]]
            g = PartitionedGraph.from_marriage(rows)
            assert (clique_decomposition(g) is not None) == hall_condition(g).holds


class TestFriendshipTheorem:
    """Hall condition against decomposability."""

    def test_hexagon_violates_sufficiency(self, hexagon):
        """Hall holds but there is no decomposition."""
        report = check_friendship_theorem(hexagon)
        assert report.hall.holds
        assert not report.decomposable
        assert report.verdict is Verdict.SUFFICIENCY_VIOLATED
        assert report.verdict == "sufficiency-violated"
        assert report.verdict.is_violation

    def test_complete_is_consistent(self, complete_tripartite):
        """Decomposable and Hall."""
        assert check_friendship_theorem(complete_tripartite).verdict is Verdict.CONSISTENT

    def test_two_parts_always_consistent(self):
        """Classical Hall: n = 2 never violates, ten thousand instances with k <= 4."""
        rng = np.random.default_rng(11)
        for _ in range(10_000):
            k = int(rng.integers(1, 5))
            rows = (rng.random((k, k)) < 0.5).astype(int).tolist()
            report = check_friendship_theorem(PartitionedGraph.from_marriage(rows))
            assert report.verdict is Verdict.CONSISTENT

    def test_violation_found_among_tripartite(self):
        """All tripartite k = 2 graphs: sufficiency fails somewhere, necessity never."""
        verdicts = {check_friendship_theorem(tripartite(mask)).verdict for mask in range(4096)}
        assert Verdict.SUFFICIENCY_VIOLATED in verdicts
        assert Verdict.NECESSITY_VIOLATED not in verdicts
