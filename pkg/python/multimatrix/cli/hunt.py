"""Seeded counterexample search with greedy shrinking.

Each target pairs a random instance family with the checker whose verdict
counts as a finding:

    t21  friendship graphs, n parts of k      Hall holds but no clique decomposition
                                              (or the reverse)
    t41  n-dimensional binary multimatrices   line cover larger than line matching
    t42  as t41 for r-planes                  r-plane cover larger than r-plane matching
    t43  multipartite graphs, n parts of k    vertex cover larger than matching
    t51  graphs on n parts of k, any edges    separator larger than disjoint path count
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path

import numpy as np

from multimatrix.cli.generate import random_graph, random_multimatrix
from multimatrix.core.codec import digest, serialize
from multimatrix.core.matrix import BinaryMultimatrix
from multimatrix.core.shape import Shape, check_r
from multimatrix.friendship.decompose import check_friendship_theorem
from multimatrix.friendship.graph import PartitionedGraph, graph_digest, serialize_graph
from multimatrix.limits import DEFAULT_LIMITS, Limits, require
from multimatrix.menger import check_cover_matching, check_separator_paths
from multimatrix.minimax.duality import duality_gap
from multimatrix.pool import map_ordered_sync

logger = logging.getLogger("multimatrix.cli")

Instance = BinaryMultimatrix | PartitionedGraph


class Target(StrEnum):
    T21 = "t21"
    T41 = "t41"
    T42 = "t42"
    T43 = "t43"
    T51 = "t51"

    @property
    def on_graphs(self) -> bool:
        return self in (Target.T21, Target.T43, Target.T51)


@dataclass(frozen=True)
class HuntConfig:
    target: Target
    n: int
    k: int
    count: int
    seed: int = 0
    r: int = 1
    density: float = 0.5
    shrink: bool = True
    out_dir: Path | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", Target(self.target))
        shape = Shape(self.n, self.k)
        if self.target is Target.T41:
            object.__setattr__(self, "r", 1)
        check_r(shape, self.r)

    def check_guards(self, limits: Limits) -> None:
        if self.target.on_graphs:
            require("hunt graphs with n*k vertices", self.n * self.k, limits.vertex_guard)
        else:
            cells = Shape(self.n, self.k).cells
            require("hunt instances with k^n cells", cells, limits.cell_budget)


@dataclass(frozen=True)
class HuntFinding:
    index: int
    verdict: str
    digest: str
    path: Path | None = None
    shrunk_digest: str | None = None
    shrunk_path: Path | None = None
    shrunk_size: int | None = None


@dataclass
class HuntReport:
    config: HuntConfig
    findings: list[HuntFinding] = field(default_factory=list)


def sample(config: HuntConfig, index: int) -> Instance:
    """Instance `index` of the hunt; each (seed, index) pair has its own stream."""
    rng = np.random.default_rng([config.seed, index])
    if not config.target.on_graphs:
        return random_multimatrix(Shape(config.n, config.k), config.density, rng)
    intra = config.target is Target.T51
    return random_graph([config.k] * config.n, config.density, rng, intra=intra)


def verdict_of(target: Target, instance: Instance, r: int, limits: Limits) -> str | None:
    """The violation verdict the checker reports, or None when the claim holds."""
    match target:
        case Target.T21:
            verdict = check_friendship_theorem(instance).verdict
            return str(verdict) if verdict.is_violation else None
        case Target.T41 | Target.T42:
            gap = duality_gap(instance, r, limits).gap
            return "gap" if gap else None
        case Target.T43:
            report = check_cover_matching(instance, limits)
            return "gap" if report.gap else None
        case Target.T51:
            report = check_separator_paths(instance, limits)
            return "gap" if report.gap else None


def encode(instance: Instance) -> bytes:
    if isinstance(instance, PartitionedGraph):
        return serialize_graph(instance)
    return serialize(instance)


def fingerprint(instance: Instance) -> str:
    if isinstance(instance, PartitionedGraph):
        return graph_digest(instance)
    return digest(instance)


def size_of(instance: Instance) -> int:
    """Ones of a multimatrix, edges of a graph."""
    if isinstance(instance, PartitionedGraph):
        return len(instance.edges)
    return instance.count()


def _removals(instance: Instance) -> list[Instance]:
    if isinstance(instance, PartitionedGraph):
        return [instance.without_edge(e) for e in instance.edges]
    return [instance.with_cell(c, 0) for c in instance.ones_coords()]


def shrink(instance: Instance, still_violates: Callable[[Instance], bool]) -> Instance:
    """Drop single ones or edges in canonical order while the violation persists.

    Passes repeat until none succeeds, so the result is locally minimal.
    """
    changed = True
    while changed:
        changed = False
        for smaller in _removals(instance):
            if still_violates(smaller):
                instance = smaller
                changed = True
                break
    return instance


def _has_verdict(
    target: Target, r: int, limits: Limits, verdict: str, instance: Instance
) -> bool:
    return verdict_of(target, instance, r, limits) == verdict


def _check_one(config: HuntConfig, limits: Limits, index: int) -> tuple[int, str | None]:
    return index, verdict_of(config.target, sample(config, index), config.r, limits)


def _suffix(instance: Instance) -> str:
    return "pg" if isinstance(instance, PartitionedGraph) else "mm"


def hunt(config: HuntConfig, limits: Limits = DEFAULT_LIMITS) -> HuntReport:
    """Stream `config.count` seeded instances through the target's checker.

    Instances are checked in a worker pool; findings are shrunk and written by
    this process in index order, so output does not depend on `limits.workers`.
    """
    config.check_guards(limits)
    work = functools.partial(_check_one, config, limits)
    results = map_ordered_sync(work, range(config.count), limits.workers)

    report = HuntReport(config)
    stem = f"{config.target}-n{config.n}-k{config.k}"
    if config.target is Target.T42:
        stem += f"-r{config.r}"
    for index, verdict in results:
        if verdict is None:
            continue
        instance = sample(config, index)
        text = encode(instance)
        path = shrunk_path = shrunk_digest = shrunk_size = None
        if config.out_dir is not None:
            config.out_dir.mkdir(parents=True, exist_ok=True)
            path = config.out_dir / f"{stem}-{index:06d}.{_suffix(instance)}"
            path.write_bytes(text)
        if config.shrink:
            still = functools.partial(_has_verdict, config.target, config.r, limits, verdict)
            small = shrink(instance, still)
            shrunk_digest, shrunk_size = fingerprint(small), size_of(small)
            if config.out_dir is not None:
                shrunk_path = config.out_dir / f"{stem}-{index:06d}-min.{_suffix(small)}"
                shrunk_path.write_bytes(encode(small))
        finding = HuntFinding(
            index, verdict, fingerprint(instance), path, shrunk_digest, shrunk_path, shrunk_size
        )
        report.findings.append(finding)
        logger.warning(
            "%s finding at instance %d: %s (%s)", config.target, index, verdict, finding.digest
        )
    logger.info(
        "hunted %d instances for %s: %d findings",
        config.count,
        config.target,
        len(report.findings),
    )
    return report
