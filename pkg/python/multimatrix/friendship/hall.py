from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import networkx as nx

from multimatrix.friendship.graph import PartitionedGraph

logger = logging.getLogger("multimatrix.friendship")


@dataclass(frozen=True)
class HallViolation:
    """Subset S of part `source` whose joint neighborhood in part `target` is too small."""

    source: int
    target: int
    subset: tuple[int, ...]
    neighborhood: tuple[int, ...]
    # k minus the maximum matching size between the two parts.
    pair_deficiency: int

    @property
    def deficiency(self) -> int:
        return len(self.subset) - len(self.neighborhood)


@dataclass(frozen=True)
class HallResult:
    holds: bool
    violation: HallViolation | None = None

    def __bool__(self) -> bool:
        return self.holds


def joint_neighborhood(g: PartitionedGraph, subset: tuple[int, ...], target: int) -> set[int]:
    part = set(g.parts[target - 1])
    return {w for v in subset for w in g.neighbors(v) if w in part}


def _pair_matching(g: PartitionedGraph, i: int, j: int) -> dict[int, int]:
    left, right = g.parts[i - 1], set(g.parts[j - 1])
    pair = nx.Graph()
    pair.add_nodes_from(left)
    pair.add_nodes_from(sorted(right))
    pair.add_edges_from((u, v) for u in left for v in sorted(g.neighbors(u)) if v in right)
    return nx.bipartite.hopcroft_karp_matching(pair, top_nodes=left)


def _deficient_set(
    g: PartitionedGraph, i: int, j: int, matching: dict[int, int]
) -> tuple[int, ...]:
    """Source vertices reachable by alternating paths from unmatched source vertices."""
    right = set(g.parts[j - 1])
    frontier = [u for u in g.parts[i - 1] if u not in matching]
    reached = set(frontier)
    while frontier:
        u = frontier.pop()
        for w in g.neighbors(u):
            if w in right and w in matching:
                mate = matching[w]
                if mate not in reached:
                    reached.add(mate)
                    frontier.append(mate)
    return tuple(sorted(reached))


def _minimal_violation(
    g: PartitionedGraph, i: int, j: int, pool: tuple[int, ...], shortfall: int
) -> HallViolation:
    for size in range(1, len(pool) + 1):
        for subset in itertools.combinations(pool, size):
            neighborhood = joint_neighborhood(g, subset, j)
            if len(neighborhood) < size:
                return HallViolation(i, j, subset, tuple(sorted(neighborhood)), shortfall)
    raise AssertionError(f"alternating set {pool} of part {i} is not Hall-deficient in part {j}")


def hall_condition(g: PartitionedGraph) -> HallResult:
    """Pairwise Hall condition: every S in A^i has >= |S| joint neighbors in every A^j.

    Each ordered pair is decided by a maximum bipartite matching. On failure the
    witness is the pair with the largest deficiency (earliest pair on ties) and a
    smallest violating subset drawn from its alternating-reachable deficient set.
    """
    k = g.check_friendship()
    worst: tuple[int, int, int, dict[int, int]] | None = None
    for i, j in itertools.permutations(range(1, g.n + 1), 2):
        matching = _pair_matching(g, i, j)
        matched = sum(1 for u in g.parts[i - 1] if u in matching)
        deficiency = k - matched
        logger.debug("hall pair (%d,%d): matching %d of %d", i, j, matched, k)
        if deficiency and (worst is None or deficiency > worst[0]):
            worst = (deficiency, i, j, matching)
    if worst is None:
        return HallResult(True)
    shortfall, i, j, matching = worst
    violation = _minimal_violation(g, i, j, _deficient_set(g, i, j, matching), shortfall)
    return HallResult(False, violation)
