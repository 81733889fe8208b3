"""Tests for the seeded counterexample hunt."""

import pytest
from multimatrix.cli.hunt import HuntConfig, Target, hunt, sample, shrink, verdict_of
from multimatrix.core import BinaryMultimatrix, Shape
from multimatrix.exceptions import FeasibilityError, InputError
from multimatrix.friendship import PartitionedGraph, graph_digest, parse_graph
from multimatrix.limits import DEFAULT_LIMITS, Limits


@pytest.fixture(scope="module")
def t21_hunt(tmp_path_factory):
    """Ten thousand tripartite k = 2 graphs; a handful are hexagons in disguise."""
    out = tmp_path_factory.mktemp("t21")
    config = HuntConfig(Target.T21, n=3, k=2, count=10_000, seed=0, out_dir=out)
    return hunt(config)


class TestConfig:
    """Hunt configuration checks."""

    def test_t41_forces_lines(self):
        """Cover-matching hunts always use lines."""
        assert HuntConfig("t41", n=3, k=2, count=1, r=2).r == 1

    def test_target_coerced(self):
        """Target names become Target members."""
        assert HuntConfig("t43", n=3, k=1, count=1).target is Target.T43
        assert Target.T51.on_graphs
        assert not Target.T42.on_graphs

    def test_bad_r(self):
        """r outside 1..n is rejected."""
        with pytest.raises(InputError, match="r must be in 1..3"):
            HuntConfig(Target.T42, n=3, k=2, count=1, r=4)

    def test_guards(self):
        """Graph targets are bounded by vertices, multimatrix targets by cells."""
        with pytest.raises(FeasibilityError, match="requires 15"):
            hunt(HuntConfig(Target.T43, n=3, k=5, count=1))
        with pytest.raises(FeasibilityError, match="requires 125"):
            hunt(HuntConfig(Target.T42, n=3, k=5, count=1, r=2))


class TestSample:
    """Seeded per-index instance sampling."""

    def test_repeatable(self):
        """Same seed and index give the same instance."""
        config = HuntConfig(Target.T51, n=3, k=2, count=5, seed=3)
        assert sample(config, 2) == sample(config, 2)

    def test_streams_differ(self):
        """Different indices draw different instances."""
        config = HuntConfig(Target.T42, n=3, k=3, count=5, seed=3, r=2)
        assert len({sample(config, i) for i in range(5)}) > 1

    def test_only_t51_has_intra_part_edges(self):
        """Friendship and cover targets draw multipartite graphs."""
        for target in (Target.T21, Target.T43):
            config = HuntConfig(target, n=2, k=3, count=20, density=1.0)
            g = sample(config, 0)
            assert g.edges == g.inter_part_edges()
        g = sample(HuntConfig(Target.T51, n=2, k=3, count=1, density=1.0), 0)
        assert len(g.edges) == 15


class TestShrink:
    """Greedy shrinking of counterexamples."""

    def test_multimatrix(self):
        """Ones are dropped in canonical order until the predicate fails."""
        small = shrink(BinaryMultimatrix.ones(Shape(2, 2)), lambda m: m.count() >= 2)
        assert small.ones_coords() == [(2, 1), (2, 2)]

    def test_triangle_is_minimal(self):
        """No edge of the triangle can go."""
        triangle = PartitionedGraph([[1], [2], [3]], [(1, 2), (1, 3), (2, 3)])

        def still(g):
            return verdict_of(Target.T43, g, 1, DEFAULT_LIMITS) == "gap"

        assert shrink(triangle, still) == triangle


class TestHunt:
    """End-to-end hunts over seeded families."""

    def test_t21_finds_sufficiency_violations(self, t21_hunt):
        """Hall-satisfying indecomposable graphs turn up."""
        assert t21_hunt.findings
        assert {f.verdict for f in t21_hunt.findings} == {"sufficiency-violated"}

    def test_t21_findings_reverify(self, t21_hunt):
        """Saved instances reload to the same digest and verdict."""
        for finding in t21_hunt.findings:
            g = parse_graph(finding.path.read_bytes())
            assert graph_digest(g) == finding.digest
            assert verdict_of(Target.T21, g, 1, DEFAULT_LIMITS) == finding.verdict
            assert finding.path.name == f"t21-n3-k2-{finding.index:06d}.pg"

    def test_t21_shrunk_locally_minimal(self, t21_hunt):
        """Every shrunk graph still violates and loses the violation without any edge."""
        for finding in t21_hunt.findings:
            g = parse_graph(finding.shrunk_path.read_bytes())
            assert len(g.edges) == finding.shrunk_size
            assert verdict_of(Target.T21, g, 1, DEFAULT_LIMITS) == finding.verdict
            for edge in g.edges:
                assert verdict_of(Target.T21, g.without_edge(edge), 1, DEFAULT_LIMITS) is None

    def test_t41_on_matrices_is_clean(self):
        """Line covers and matchings agree on ordinary matrices."""
        assert hunt(HuntConfig(Target.T41, n=2, k=4, count=300)).findings == []

    def test_t51_two_parts_is_clean(self):
        """Two-part graphs have no separator-paths gap."""
        assert hunt(HuntConfig(Target.T51, n=2, k=3, count=100)).findings == []

    def test_workers_do_not_change_findings(self):
        """A process pool reports the same findings as inline runs."""
        config = HuntConfig(Target.T43, n=3, k=1, count=300, seed=5, shrink=False)
        inline = hunt(config)
        pooled = hunt(config, Limits(workers=2))
        assert inline.findings == pooled.findings
        assert inline.findings

    def test_no_shrink_leaves_fields_empty(self):
        """--no-shrink skips the shrunk fields."""
        config = HuntConfig(Target.T43, n=3, k=1, count=100, shrink=False)
        assert all(f.shrunk_digest is None for f in hunt(config).findings)
