"""Tests for the duality gap and the gap scanner."""

from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from multimatrix.core import BinaryMultimatrix, Shape, digest, from_entries, parse, serialize
from multimatrix.exceptions import FeasibilityError
from multimatrix.limits import Limits
from multimatrix.minimax import (
    ScanMode,
    duality_gap,
    exhaustive_instance,
    gap_scan,
    random_instance,
)

GOLDEN = Path(__file__).parent.parent / "data" / "gap_2x2x2_r1.txt"


def bipartite_matching_size(m):
    rows = [("row", i) for i in range(m.shape.k)]
    g = nx.Graph()
    g.add_nodes_from(rows)
    g.add_edges_from((("row", i), ("col", j)) for i, j in zip(*np.nonzero(m.array)))
    return len(nx.bipartite.hopcroft_karp_matching(g, top_nodes=rows)) // 2


def golden_histogram():
    lines = GOLDEN.read_text().splitlines()[1:-1]
    return {int(gap): int(count) for gap, count in (line.split() for line in lines)}


class TestDualityGap:
    """alpha - beta on single instances."""

    def test_all_zero(self):
        """Both sides are zero."""
        report = duality_gap(BinaryMultimatrix.zeros(Shape(3, 2)))
        assert (report.alpha, report.beta, report.gap) == (0, 0, 0)

    def test_all_ones_cube(self):
        """alpha = beta = 4 on the all-ones cube."""
        report = duality_gap(BinaryMultimatrix.ones(Shape(3, 2)))
        assert (report.alpha, report.beta, report.gap) == (4, 4, 0)

    def test_two_planes_all_ones(self):
        """r = 2 on the all-ones cube: 2 against 2."""
        report = duality_gap(BinaryMultimatrix.ones(Shape(3, 2)), r=2)
        assert (report.alpha, report.beta) == (2, 2)

    def test_konig_on_matrices(self):
        """n = 2, r = 1 never shows a gap on ten thousand random matrices, k <= 4."""
        rng = np.random.default_rng(31)
        for i in range(10_000):
            k = int(rng.integers(1, 5))
            m = BinaryMultimatrix(Shape(2, k), rng.random((k, k)) < 0.5)
            assert duality_gap(m).gap == 0, i

    @pytest.mark.parametrize("k,count", [(2, 16), (3, 512)])
    def test_konig_all_small_matrices(self, k, count):
        """Every 2x2 and 3x3 matrix: cover, matching and bipartite matching agree."""
        shape = Shape(2, k)
        for index in range(count):
            m = exhaustive_instance(shape, index)
            report = duality_gap(m)
            assert report.gap == 0, index
            assert report.beta == bipartite_matching_size(m), index


class TestInstances:
    """Instance families used by scans."""

    def test_exhaustive_bits_most_significant_first(self):
        """Bit 0 of the index is the last cell."""
        shape = Shape(2, 2)
        assert exhaustive_instance(shape, 1).ones_coords() == [(2, 2)]
        assert exhaustive_instance(shape, 8).ones_coords() == [(1, 1)]
        assert exhaustive_instance(shape, 15) == BinaryMultimatrix.ones(shape)

    def test_random_instance_is_seeded(self):
        """Same (seed, index) gives the same instance."""
        shape = Shape(3, 3)
        assert random_instance(shape, 4, 10) == random_instance(shape, 4, 10)
        assert serialize(random_instance(shape, 4, 10)) != serialize(random_instance(shape, 4, 11))

    def test_density_extremes(self):
        """Density 0 and 1 give constant instances."""
        shape = Shape(3, 2)
        assert random_instance(shape, 1, 0, density=0.0).count() == 0
        assert random_instance(shape, 1, 0, density=1.0).count() == 8


class TestGapScan:
    """Histograms over instance families."""

    def test_matrices_exhaustive(self):
        """All 16 instances of 2x2 have gap 0."""
        report = gap_scan(Shape(2, 2))
        assert report.histogram == {0: 16}
        assert report.findings == []

    def test_cube_exhaustive_matches_golden(self):
        """All 256 instances of 2x2x2 against the frozen histogram."""
        report = gap_scan(Shape(3, 2), r=1)
        assert report.count == 256
        assert report.histogram == golden_histogram()

    def test_cube_parallel_matches_inline(self):
        """A worker pool gives the same histogram as the inline run."""
        inline = gap_scan(Shape(3, 2), r=2)
        pooled = gap_scan(Shape(3, 2), r=2, limits=Limits(workers=2))
        assert pooled.histogram == inline.histogram
        assert [f.digest for f in pooled.findings] == [f.digest for f in inline.findings]
        assert sum(inline.histogram.values()) == 256

    def test_random_mode_is_deterministic(self):
        """Equal seeds give equal reports."""
        a = gap_scan(Shape(3, 3), r=1, mode=ScanMode.RANDOM, count=30, seed=8)
        b = gap_scan(Shape(3, 3), r=1, mode="random", count=30, seed=8)
        assert a.histogram == b.histogram
        assert sum(a.histogram.values()) == 30

    def test_scan_budget(self):
        """2^(k^n) instances beyond the scan budget are refused."""
        with pytest.raises(FeasibilityError, match="requires 512"):
            gap_scan(Shape(2, 3), limits=Limits(scan_budget=256))

    def test_findings_are_written(self, tmp_path):
        """Every positive-gap instance is persisted and parses back to its digest."""
        report = gap_scan(Shape(3, 2), r=2, out_dir=tmp_path)
        assert len(report.findings) == sum(n for gap, n in report.histogram.items() if gap > 0)
        for finding in report.findings:
            assert finding.path.exists()
            m = parse(finding.path.read_bytes())
            assert digest(m) == finding.digest
            assert duality_gap(m, 2).gap == finding.alpha - finding.beta > 0

    def test_single_plane_gap_free(self):
        """r = n always has alpha = beta."""
        report = gap_scan(Shape(2, 2), r=2)
        assert report.histogram == {0: 16}


def test_weak_duality_on_sparse_instance():
    """A staircase of ones keeps alpha >= beta."""
    m = from_entries(Shape(3, 3), [(1, 1, 1), (1, 2, 2), (2, 2, 3), (3, 3, 3)])
    report = duality_gap(m)
    assert report.alpha >= report.beta
