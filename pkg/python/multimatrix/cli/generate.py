from __future__ import annotations

import itertools
from collections.abc import Sequence
from enum import StrEnum

import numpy as np

from multimatrix.core.codec import serialize
from multimatrix.core.matrix import BinaryMultimatrix, CostMultimatrix
from multimatrix.core.shape import Shape
from multimatrix.exceptions import InputError
from multimatrix.friendship.graph import PartitionedGraph, serialize_graph


class InstanceKind(StrEnum):
    MULTIMATRIX = "multimatrix"
    COSTMATRIX = "costmatrix"
    GRAPH = "graph"


def _check_density(density: float) -> None:
    if not 0.0 <= density <= 1.0:
        raise InputError(f"density must be in [0, 1], got {density}")


def random_multimatrix(
    shape: Shape, density: float, rng: np.random.Generator
) -> BinaryMultimatrix:
    _check_density(density)
    return BinaryMultimatrix(shape, rng.random(shape.dims) < density)


def random_costmatrix(
    shape: Shape, low: int, high: int, rng: np.random.Generator
) -> CostMultimatrix:
    """Integer costs drawn uniformly from low..high inclusive."""
    if low > high:
        raise InputError(f"empty cost range {low}..{high}")
    values = rng.integers(low, high, size=shape.dims, endpoint=True)
    return CostMultimatrix(shape, values.astype(object))


def random_graph(
    part_sizes: Sequence[int],
    density: float,
    rng: np.random.Generator,
    intra: bool = False,
) -> PartitionedGraph:
    """Vertices 1..|V| split into consecutive parts; each candidate edge kept with `density`.

    Candidate edges are the inter-part pairs, plus intra-part pairs when `intra` is set,
    drawn in ascending (u, v) order.
    """
    _check_density(density)
    if any(size < 0 for size in part_sizes):
        raise InputError(f"part sizes must be non-negative, got {list(part_sizes)}")
    bounds = np.cumsum([0, *part_sizes])
    parts = [range(int(a) + 1, int(b) + 1) for a, b in itertools.pairwise(bounds)]
    owner = {v: p for p, part in enumerate(parts) for v in part}
    candidates = [
        (u, v)
        for u, v in itertools.combinations(sorted(owner), 2)
        if intra or owner[u] != owner[v]
    ]
    keep = rng.random(len(candidates)) < density
    return PartitionedGraph(parts, [e for e, kept in zip(candidates, keep) if kept])


def generate(
    kind: InstanceKind | str,
    n: int,
    k: int,
    seed: int,
    density: float = 0.5,
    low: int = 0,
    high: int = 9,
    part_sizes: Sequence[int] | None = None,
) -> bytes:
    """Canonical text of a seeded random instance; the same arguments give the same bytes.

    Graphs default to n parts of k vertices each.
    """
    kind = InstanceKind(kind)
    rng = np.random.default_rng(seed)
    if kind is InstanceKind.GRAPH:
        sizes = list(part_sizes) if part_sizes is not None else [k] * n
        return serialize_graph(random_graph(sizes, density, rng))
    shape = Shape(n, k)
    if kind is InstanceKind.MULTIMATRIX:
        return serialize(random_multimatrix(shape, density, rng))
    return serialize(random_costmatrix(shape, low, high, rng))
