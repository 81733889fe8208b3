from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from multimatrix.core.matrix import BinaryMultimatrix
from multimatrix.core.shape import Shape
from multimatrix.det.monomial import find_nonzero_monomial
from multimatrix.det.permutation import PermutationTuple, support_of
from multimatrix.friendship.graph import PartitionedGraph
from multimatrix.friendship.hall import HallResult, hall_condition

logger = logging.getLogger("multimatrix.friendship")


@dataclass(frozen=True)
class Decomposition:
    """k disjoint friendship sets B^1..B^k, each holding one vertex per part (in part order)."""

    sets: tuple[tuple[int, ...], ...]
    monomial: PermutationTuple | None = None


class Verdict(StrEnum):
    CONSISTENT = "consistent"
    SUFFICIENCY_VIOLATED = "sufficiency-violated"
    NECESSITY_VIOLATED = "necessity-violated"

    @property
    def is_violation(self) -> bool:
        return self is not Verdict.CONSISTENT


@dataclass(frozen=True)
class FriendshipReport:
    hall: HallResult
    decomposition: Decomposition | None
    verdict: Verdict

    @property
    def decomposable(self) -> bool:
        return self.decomposition is not None


def tensorize(g: PartitionedGraph) -> BinaryMultimatrix:
    """Cell (i_1..i_n) is 1 iff the i_p-th vertex of each part A^p are pairwise adjacent.

    Raises:
        InputError: Unequal part sizes or an intra-part edge.
    """
    k = g.check_friendship()
    shape = Shape(g.n, k)
    # adjacency between positions of every pair of parts
    blocks = {
        (p, q): np.array(
            [[g.has_edge(u, v) for v in g.parts[q]] for u in g.parts[p]], dtype=bool
        )
        for p, q in itertools.combinations(range(g.n), 2)
    }
    array = np.ones(shape.dims, dtype=bool)
    for (p, q), block in blocks.items():
        view = [1] * g.n
        view[p], view[q] = k, k
        array &= block.reshape(view)
    return BinaryMultimatrix(shape, array)


def _sets_from_tuple(g: PartitionedGraph, t: PermutationTuple) -> tuple[tuple[int, ...], ...]:
    shape = Shape(g.n, len(g.parts[0]))
    return tuple(
        tuple(g.parts[p][i - 1] for p, i in enumerate(coord)) for coord in support_of(shape, t)
    )


def clique_decomposition(g: PartitionedGraph) -> Decomposition | None:
    """Partition into k vertex-disjoint n-cliques, one vertex per part, if one exists.

    A nonzero multideterminantal monomial of the tensorized graph selects the
    cliques; the lexicographically least monomial makes the answer deterministic.
    """
    t = find_nonzero_monomial(tensorize(g))
    if t is None:
        return None
    decomposition = Decomposition(_sets_from_tuple(g, t), t)
    verify_decomposition(g, decomposition)
    return decomposition


def verify_decomposition(g: PartitionedGraph, d: Decomposition) -> None:
    """Check disjointness, coverage and pairwise adjacency of a decomposition."""
    k = g.check_friendship()
    if len(d.sets) != k:
        raise AssertionError(f"decomposition has {len(d.sets)} sets, expected {k}")
    covered = [v for s in d.sets for v in s]
    if sorted(covered) != g.vertices:
        raise AssertionError("decomposition does not cover every vertex exactly once")
    for s in d.sets:
        if [g.part_of(v) for v in s] != list(range(1, g.n + 1)):
            raise AssertionError(f"set {s} does not take one vertex from each part in order")
        for u, v in itertools.combinations(s, 2):
            if not g.has_edge(u, v):
                raise AssertionError(f"set {s} is not a clique: {u}-{v} missing")


def check_friendship_theorem(g: PartitionedGraph) -> FriendshipReport:
    """Compare the pairwise Hall condition with actual decomposability."""
    hall = hall_condition(g)
    decomposition = clique_decomposition(g)
    if hall.holds == (decomposition is not None):
        verdict = Verdict.CONSISTENT
    elif hall.holds:
        verdict = Verdict.SUFFICIENCY_VIOLATED
    else:
        verdict = Verdict.NECESSITY_VIOLATED
    if verdict.is_violation:
        logger.info("friendship theorem %s on %r", verdict, g)
    return FriendshipReport(hall, decomposition, verdict)
