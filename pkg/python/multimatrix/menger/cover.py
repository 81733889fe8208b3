from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx

from multimatrix.exceptions import InputError
from multimatrix.friendship.graph import Edge, PartitionedGraph
from multimatrix.limits import DEFAULT_LIMITS, Limits, require

logger = logging.getLogger("multimatrix.menger")


class MinimaxVerdict(StrEnum):
    EQUAL = "equal"
    GAP = "gap"

    @property
    def is_violation(self) -> bool:
        return self is MinimaxVerdict.GAP


@dataclass(frozen=True)
class EdgeMatching:
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VertexCover:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CoverMatchingReport:
    cover: VertexCover
    matching: EdgeMatching
    verdict: MinimaxVerdict

    @property
    def gap(self) -> int:
        return self.cover.size - self.matching.size


def guard(g: PartitionedGraph, limits: Limits) -> None:
    require("brute force on |V| vertices", len(g.vertices), limits.vertex_guard)


def _multipartite_edges(g: PartitionedGraph) -> list[Edge]:
    for u, v in g.edges:
        if g.part_of(u) == g.part_of(v):
            raise InputError(f"edge {u}-{v} lies inside part {g.part_of(u)}; not multipartite")
    return g.edges


def max_edge_packing(edges: list[Edge]) -> list[Edge]:
    """Largest set of pairwise vertex-disjoint edges, lexicographically least among optima.

    Include-first search over sorted edges meets equal-size sets in lexicographic
    order, and only strictly larger sets replace the incumbent.
    """
    edges = sorted(edges)
    best: list[Edge] = []

    def search(start: int, chosen: list[Edge], used: set[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        free = {w for e in edges[start:] for w in e} - used
        if len(chosen) + len(free) // 2 <= len(best):
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            search(i + 1, chosen, used | {u, v})
            chosen.pop()

    search(0, [], set())
    return best


def max_matching_multipartite(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS
) -> EdgeMatching:
    """Exact maximum matching by backtracking.

    Raises:
        InputError: An edge joins two vertices of the same part.
        FeasibilityError: |V| exceeds `limits.vertex_guard`.
    """
    guard(g, limits)
    matching = EdgeMatching(tuple(max_edge_packing(_multipartite_edges(g))))
    verify_edge_matching(g, matching)
    return matching


def min_vertex_cover_multipartite(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS
) -> VertexCover:
    """Exact minimum vertex cover by subset enumeration in increasing size."""
    guard(g, limits)
    edges = _multipartite_edges(g)
    for size in range(len(g.vertices) + 1):
        for subset in itertools.combinations(g.vertices, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                cover = VertexCover(subset)
                verify_vertex_cover(g, cover)
                return cover
    raise AssertionError("the full vertex set is always a cover")


def check_cover_matching(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS
) -> CoverMatchingReport:
    """Minimum vertex cover against maximum matching on a multipartite graph."""
    cover = min_vertex_cover_multipartite(g, limits)
    matching = max_matching_multipartite(g, limits)
    if matching.size > cover.size:
        raise AssertionError(f"matching {matching.size} exceeds cover {cover.size}")
    verdict = MinimaxVerdict.EQUAL if cover.size == matching.size else MinimaxVerdict.GAP
    if verdict.is_violation and nx.is_bipartite(g.graph):
        raise AssertionError("bipartite graph with a cover/matching gap contradicts König")
    logger.debug("cover %d vs matching %d on %r", cover.size, matching.size, g)
    return CoverMatchingReport(cover, matching, verdict)


def verify_edge_matching(g: PartitionedGraph, matching: EdgeMatching) -> None:
    used: set[int] = set()
    for u, v in matching.edges:
        if not g.has_edge(u, v):
            raise AssertionError(f"matched pair {u}-{v} is not an edge")
        if u in used or v in used:
            raise AssertionError(f"matched edge {u}-{v} shares a vertex")
        used |= {u, v}


def verify_vertex_cover(g: PartitionedGraph, cover: VertexCover) -> None:
    chosen = set(cover.vertices)
    for u, v in g.edges:
        if u not in chosen and v not in chosen:
            raise AssertionError(f"edge {u}-{v} is not covered")
