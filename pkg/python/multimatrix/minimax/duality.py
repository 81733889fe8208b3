from __future__ import annotations

import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path

import numpy as np

from multimatrix.core.codec import digest, serialize
from multimatrix.core.matrix import BinaryMultimatrix
from multimatrix.core.shape import Shape, check_r
from multimatrix.limits import DEFAULT_LIMITS, Limits, require
from multimatrix.minimax.solver import (
    CoverCertificate,
    MatchingCertificate,
    max_rplane_matching,
    min_rplane_cover,
)
from multimatrix.pool import map_ordered_sync

logger = logging.getLogger("multimatrix.minimax")


class ScanMode(StrEnum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True)
class DualityReport:
    """alpha (min cover) against beta (max matching) for one instance and r."""

    r: int
    cover: CoverCertificate
    matching: MatchingCertificate

    @property
    def alpha(self) -> int:
        return self.cover.size

    @property
    def beta(self) -> int:
        return self.matching.size

    @property
    def gap(self) -> int:
        return self.alpha - self.beta


def duality_gap(
    m: BinaryMultimatrix, r: int = 1, limits: Limits = DEFAULT_LIMITS
) -> DualityReport:
    """Solve both sides exactly; weak duality (alpha >= beta) is asserted."""
    report = DualityReport(r, min_rplane_cover(m, r, limits), max_rplane_matching(m, r, limits))
    if report.gap < 0:
        raise AssertionError(
            f"weak duality broken on {digest(m)}: {report.alpha} < {report.beta}"
        )
    return report


def exhaustive_instance(shape: Shape, index: int) -> BinaryMultimatrix:
    """Instance number `index` of the 2^(k^n) binary multimatrices.

    Bit c of `index` (most significant first) is the c-th cell in dense file order.
    """
    cells = shape.cells
    bits = [(index >> (cells - 1 - c)) & 1 for c in range(cells)]
    return BinaryMultimatrix(shape, np.array(bits, dtype=bool).reshape(shape.dims))


def random_instance(
    shape: Shape, seed: int, index: int, density: float = 0.5
) -> BinaryMultimatrix:
    """Seeded instance; each (seed, index) pair has its own generator stream."""
    rng = np.random.default_rng([seed, index])
    return BinaryMultimatrix(shape, rng.random(shape.dims) < density)


@dataclass(frozen=True)
class ScanFinding:
    index: int
    alpha: int
    beta: int
    digest: str
    text: bytes
    path: Path | None = None


@dataclass
class ScanReport:
    shape: Shape
    r: int
    mode: ScanMode
    count: int
    seed: int
    histogram: dict[int, int] = field(default_factory=dict)
    findings: list[ScanFinding] = field(default_factory=list)


def _scan_one(
    shape: Shape, r: int, mode: ScanMode, seed: int, density: float, limits: Limits, index: int
) -> tuple[int, int, int, bytes | None]:
    if mode is ScanMode.EXHAUSTIVE:
        m = exhaustive_instance(shape, index)
    else:
        m = random_instance(shape, seed, index, density)
    report = duality_gap(m, r, limits)
    text = serialize(m) if report.gap > 0 else None
    return index, report.alpha, report.beta, text


def gap_scan(
    shape: Shape,
    r: int = 1,
    mode: ScanMode | str = ScanMode.EXHAUSTIVE,
    count: int = 0,
    seed: int = 0,
    out_dir: Path | None = None,
    density: float = 0.5,
    limits: Limits = DEFAULT_LIMITS,
) -> ScanReport:
    """Gap histogram over a family of instances.

    Exhaustive mode visits all 2^(k^n) instances and ignores `count`; random mode
    draws `count` seeded instances. Every instance with a positive gap is recorded
    and, when `out_dir` is given, written there in canonical form.

    Raises:
        FeasibilityError: The exhaustive family exceeds `limits.scan_budget`.
    """
    check_r(shape, r)
    mode = ScanMode(mode)
    if mode is ScanMode.EXHAUSTIVE:
        family = f"exhaustive scan of shape n={shape.n}, k={shape.k}"
        require(family, 2**shape.cells, limits.scan_budget)
        count = 2**shape.cells
    require("solver on k^n cells", shape.cells, limits.cell_budget)

    work = functools.partial(_scan_one, shape, r, mode, seed, density, limits)
    results = map_ordered_sync(work, range(count), limits.workers)

    report = ScanReport(shape, r, mode, count, seed)
    histogram: Counter[int] = Counter()
    for index, alpha, beta, text in results:
        histogram[alpha - beta] += 1
        if text is None:
            continue
        path = None
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
            path = out_dir / f"gap-r{r}-n{shape.n}-k{shape.k}-{mode}-{index:06d}.mm"
            path.write_bytes(text)
        report.findings.append(ScanFinding(index, alpha, beta, digest(text), text, path))
        logger.warning("gap %d at instance %d (%s)", alpha - beta, index, digest(text))
    report.histogram = dict(sorted(histogram.items()))
    logger.info(
        "scanned %d instances of n=%d k=%d r=%d: %s", count, shape.n, shape.k, r, report.histogram
    )
    return report
