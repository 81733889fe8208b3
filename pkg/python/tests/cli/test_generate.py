"""Tests for seeded instance generation."""

import numpy as np
import pytest
from multimatrix.cli.generate import (
    InstanceKind,
    generate,
    random_costmatrix,
    random_graph,
    random_multimatrix,
)
from multimatrix.core import CostMultimatrix, Shape, parse
from multimatrix.exceptions import InputError
from multimatrix.friendship import parse_graph


class TestGenerate:
    """Seeded instance text for every kind."""

    def test_deterministic(self):
        for kind in InstanceKind:
            assert generate(kind, 3, 3, seed=9) == generate(kind, 3, 3, seed=9)

    def test_seeds_differ(self):
        assert generate("multimatrix", 3, 3, seed=1) != generate("multimatrix", 3, 3, seed=2)

    def test_costs_in_range(self):
        """Both endpoints are reachable and nothing falls outside."""
        c = parse(generate(InstanceKind.COSTMATRIX, 2, 9, seed=0, low=-1, high=1))
        assert isinstance(c, CostMultimatrix)
        assert set(c.array.flat) == {-1, 0, 1}

    def test_graph_parts(self):
        g = parse_graph(generate("graph", 3, 2, seed=0, density=1.0))
        assert g.parts == ((1, 2), (3, 4), (5, 6))
        assert len(g.edges) == 12

    def test_custom_part_sizes(self):
        g = parse_graph(generate("graph", 2, 1, seed=0, part_sizes=[1, 3]))
        assert g.parts == ((1,), (2, 3, 4))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            generate("tensor", 2, 2, seed=0)


class TestSamplers:
    """Random sampler argument checks."""

    @pytest.mark.parametrize("density", [-0.1, 1.5])
    def test_density_range(self, density):
        with pytest.raises(InputError, match="density"):
            random_multimatrix(Shape(2, 2), density, np.random.default_rng(0))

    def test_empty_cost_range(self):
        with pytest.raises(InputError, match="empty cost range"):
            random_costmatrix(Shape(2, 2), 5, 4, np.random.default_rng(0))

    def test_intra_part_candidates(self):
        """Dense graphs are complete multipartite, or complete with `intra`."""
        rng = np.random.default_rng(0)
        assert len(random_graph([2, 3], 1.0, rng).edges) == 6
        assert len(random_graph([2, 3], 1.0, rng, intra=True).edges) == 10

    def test_negative_part(self):
        with pytest.raises(InputError, match="non-negative"):
            random_graph([2, -1], 0.5, np.random.default_rng(0))
