from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass

import networkx as nx

from multimatrix.friendship.graph import PartitionedGraph
from multimatrix.limits import DEFAULT_LIMITS, Limits
from multimatrix.menger.cover import MinimaxVerdict, guard

logger = logging.getLogger("multimatrix.menger")

Path = tuple[int, ...]


@dataclass(frozen=True)
class SeparatorCertificate:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathSystem:
    """Pairwise vertex-disjoint simple paths, each joining two different parts."""

    paths: tuple[Path, ...]

    @property
    def size(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class SeparatorPathsReport:
    separator: SeparatorCertificate
    paths: PathSystem
    verdict: MinimaxVerdict

    @property
    def gap(self) -> int:
        return self.separator.size - self.paths.size


def separates(g: PartitionedGraph, removed: set[int]) -> bool:
    """True when no component of G - removed holds vertices of two parts."""
    survivors = g.graph.subgraph([v for v in g.vertices if v not in removed])
    return all(
        len({g.part_of(v) for v in component}) <= 1
        for component in nx.connected_components(survivors)
    )


def min_all_pairs_separator(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS
) -> SeparatorCertificate:
    """Smallest vertex set whose removal separates every pair of parts.

    Deleted vertices may belong to the parts themselves; only survivors need to
    be separated. Subsets are tried by increasing size, so the result is the
    lexicographically least minimum separator.

    Raises:
        FeasibilityError: |V| exceeds `limits.vertex_guard`.
    """
    guard(g, limits)
    for size in range(len(g.vertices) + 1):
        for subset in itertools.combinations(g.vertices, size):
            if separates(g, set(subset)):
                certificate = SeparatorCertificate(subset)
                verify_separator(g, certificate)
                return certificate
    raise AssertionError("removing every vertex always separates")


def _walk(g: PartitionedGraph, path: list[int], exhaustive: bool) -> Iterator[Path]:
    start, last = path[0], path[-1]
    if len(path) > 1 and g.part_of(last) != g.part_of(start):
        yield tuple(path)
        if not exhaustive:
            return
    for w in sorted(g.neighbors(last)):
        if w not in path:
            path.append(w)
            yield from _walk(g, path, exhaustive)
            path.pop()


def candidate_paths(g: PartitionedGraph, exhaustive: bool = False) -> list[Path]:
    """Simple paths with endpoints in different parts, one orientation each.

    By default a walk stops at the first vertex outside its starting part. Any
    joining path contains such a prefix-minimal subpath, and replacing a path by
    a subpath keeps a system disjoint, so the maximum is unchanged. Pass
    `exhaustive=True` to list every simple joining path instead.
    """
    found = {min(p, p[::-1]) for v in g.vertices for p in _walk(g, [v], exhaustive)}
    return sorted(found, key=lambda p: (len(p), p))


def max_disjoint_paths(candidates: list[Path]) -> list[Path]:
    best: list[Path] = []

    def search(start: int, chosen: list[Path], used: set[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        free = {v for p in candidates[start:] for v in p} - used
        if len(chosen) + len(free) // 2 <= len(best):
            return
        for i in range(start, len(candidates)):
            path = candidates[i]
            if used.isdisjoint(path):
                chosen.append(path)
                search(i + 1, chosen, used | set(path))
                chosen.pop()

    search(0, [], set())
    return best


def max_disjoint_path_system(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS, exhaustive: bool = False
) -> PathSystem:
    """Maximum number of vertex-disjoint paths between different parts, all pairs pooled.

    A single inter-part edge is a path. Exact by backtracking over
    `candidate_paths`.

    Raises:
        FeasibilityError: |V| exceeds `limits.vertex_guard`.
    """
    guard(g, limits)
    system = PathSystem(tuple(max_disjoint_paths(candidate_paths(g, exhaustive))))
    verify_path_system(g, system)
    return system


def check_separator_paths(
    g: PartitionedGraph, limits: Limits = DEFAULT_LIMITS
) -> SeparatorPathsReport:
    """All-pairs separator against the disjoint path system.

    Weak duality is asserted on every graph; with at most two non-empty parts
    the two sides must agree (set form of Menger's theorem).
    """
    separator = min_all_pairs_separator(g, limits)
    paths = max_disjoint_path_system(g, limits)
    if paths.size > separator.size:
        raise AssertionError(f"{paths.size} disjoint paths exceed separator {separator.size}")
    verdict = MinimaxVerdict.EQUAL if paths.size == separator.size else MinimaxVerdict.GAP
    if verdict.is_violation and sum(1 for part in g.parts if part) <= 2:
        raise AssertionError("two-part graph with a separator/path gap contradicts Menger")
    logger.debug("separator %d vs paths %d on %r", separator.size, paths.size, g)
    return SeparatorPathsReport(separator, paths, verdict)


def verify_separator(g: PartitionedGraph, certificate: SeparatorCertificate) -> None:
    removed = set(certificate.vertices)
    if not removed <= set(g.vertices):
        raise AssertionError(f"separator {certificate.vertices} uses unknown vertices")
    if not separates(g, removed):
        raise AssertionError(f"{certificate.vertices} leaves two parts connected")


def verify_path_system(g: PartitionedGraph, system: PathSystem) -> None:
    used: set[int] = set()
    for path in system.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            raise AssertionError(f"path {path} is not simple")
        for u, v in itertools.pairwise(path):
            if not g.has_edge(u, v):
                raise AssertionError(f"path {path} uses non-edge {u}-{v}")
        if g.part_of(path[0]) == g.part_of(path[-1]):
            raise AssertionError(f"path {path} starts and ends in part {g.part_of(path[0])}")
        if not used.isdisjoint(path):
            raise AssertionError(f"path {path} meets another path")
        used.update(path)
