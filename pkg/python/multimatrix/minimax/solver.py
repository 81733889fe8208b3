from __future__ import annotations

import logging
from dataclasses import dataclass

from multimatrix.core.matrix import BinaryMultimatrix
from multimatrix.core.shape import Coord, LineId, RPlaneId, check_r, planes_of, planes_through
from multimatrix.limits import DEFAULT_LIMITS, Limits, require

logger = logging.getLogger("multimatrix.minimax")

Plane = LineId | RPlaneId


@dataclass(frozen=True)
class CoverCertificate:
    """Planes holding every 1-cell; `size` is alpha."""

    r: int
    planes: tuple[Plane, ...]

    @property
    def size(self) -> int:
        return len(self.planes)


@dataclass(frozen=True)
class MatchingCertificate:
    """1-cells no two of which share an r-plane; `size` is beta."""

    r: int
    cells: tuple[Coord, ...]

    @property
    def size(self) -> int:
        return len(self.cells)


class _Instance:
    """1-cells of a multimatrix indexed against the r-planes that contain them."""

    def __init__(self, m: BinaryMultimatrix, r: int, limits: Limits) -> None:
        check_r(m.shape, r)
        require(f"exact {r}-plane solver on k^n cells", m.shape.cells, limits.cell_budget)
        self.m = m
        self.r = r
        self.cells = m.ones_coords()
        order = {plane: i for i, plane in enumerate(planes_of(m.shape, r))}
        cell_planes = [[order[p] for p in planes_through(m.shape, r, c)] for c in self.cells]

        # only planes holding a 1-cell can appear in an optimal cover
        used = sorted({p for ps in cell_planes for p in ps})
        by_index = {i: plane for plane, i in order.items()}
        self.planes: list[RPlaneId] = [by_index[i] for i in used]
        local = {i: pos for pos, i in enumerate(used)}

        self.cell_planes = [frozenset(local[p] for p in ps) for ps in cell_planes]
        members: list[set[int]] = [set() for _ in self.planes]
        for c, ps in enumerate(self.cell_planes):
            for p in ps:
                members[p].add(c)
        self.plane_cells = [frozenset(s) for s in members]
        self.conflicts = [
            frozenset(x for p in ps for x in self.plane_cells[p]) - {c}
            for c, ps in enumerate(self.cell_planes)
        ]
        self.nodes = 0
        self._cover_memo: dict[tuple[frozenset[int], int, int], bool] = {}
        self._pack_memo: dict[tuple[frozenset[int], int], bool] = {}

    def plane(self, p: int) -> Plane:
        plane = self.planes[p]
        return plane.as_line() if self.r == 1 else plane

    # covers

    def _packing_bound(self, uncovered: frozenset[int], floor: int) -> int:
        """Greedy set of uncovered cells pairwise sharing no usable plane."""
        picked = 0
        blocked: set[int] = set()
        for c in sorted(uncovered):
            usable = {p for p in self.cell_planes[c] if p > floor}
            if not usable & blocked:
                picked += 1
                blocked |= usable
        return picked

    def cover_exists(self, uncovered: frozenset[int], floor: int, budget: int) -> bool:
        """Whether at most `budget` planes with index > `floor` hold all `uncovered` cells."""
        if not uncovered:
            return True
        if budget <= 0:
            return False
        key = (uncovered, floor, budget)
        if key in self._cover_memo:
            return self._cover_memo[key]
        self.nodes += 1

        result = False
        if self._packing_bound(uncovered, floor) <= budget:
            # branch on the cell with the fewest usable planes
            options = min(
                (sorted(p for p in self.cell_planes[c] if p > floor) for c in sorted(uncovered)),
                key=len,
            )
            result = any(
                self.cover_exists(uncovered - self.plane_cells[p], floor, budget - 1)
                for p in options
            )
        self._cover_memo[key] = result
        return result

    def min_cover(self) -> list[int]:
        everything = frozenset(range(len(self.cells)))
        alpha = self._packing_bound(everything, -1)
        while not self.cover_exists(everything, -1, alpha):
            alpha += 1

        chosen: list[int] = []
        uncovered = everything
        floor = -1
        while uncovered:
            for p in range(floor + 1, len(self.planes)):
                rest = uncovered - self.plane_cells[p]
                if rest != uncovered and self.cover_exists(rest, p, alpha - len(chosen) - 1):
                    chosen.append(p)
                    uncovered, floor = rest, p
                    break
            else:
                raise AssertionError("lexicographic cover extraction lost feasibility")
        return chosen

    # matchings

    def _clique_bound(self, candidates: frozenset[int]) -> int:
        """Greedy plane cover of the candidates; each plane admits one matched cell."""
        remaining = set(candidates)
        planes = 0
        while remaining:
            best = max(
                (
                    self.plane_cells[p] & remaining
                    for c in sorted(remaining)
                    for p in sorted(self.cell_planes[c])
                ),
                key=len,
            )
            remaining -= best
            planes += 1
        return planes

    def packing_exists(self, candidates: frozenset[int], need: int) -> bool:
        """Whether `need` pairwise compatible cells can be drawn from `candidates`."""
        if need <= 0:
            return True
        if len(candidates) < need:
            return False
        key = (candidates, need)
        if key in self._pack_memo:
            return self._pack_memo[key]
        self.nodes += 1

        result = False
        if self._clique_bound(candidates) >= need:
            first = min(candidates)
            result = self.packing_exists(
                candidates - self.conflicts[first] - {first}, need - 1
            ) or self.packing_exists(candidates - {first}, need)
        self._pack_memo[key] = result
        return result

    def max_matching(self) -> list[int]:
        everything = frozenset(range(len(self.cells)))
        beta = 0
        while self.packing_exists(everything, beta + 1):
            beta += 1

        chosen: list[int] = []
        candidates = everything
        for c in range(len(self.cells)):
            if c not in candidates:
                continue
            after = frozenset(x for x in candidates if x > c) - self.conflicts[c]
            if self.packing_exists(after, beta - len(chosen) - 1):
                chosen.append(c)
                candidates = after
                if len(chosen) == beta:
                    break
            else:
                candidates = candidates - {c}
        return chosen


def min_rplane_cover(
    m: BinaryMultimatrix, r: int, limits: Limits = DEFAULT_LIMITS
) -> CoverCertificate:
    """Fewest r-planes holding all 1-cells; the lexicographically least optimal set.

    Raises:
        InputError: r outside 1..n.
        FeasibilityError: k^n exceeds `limits.cell_budget`.
    """
    instance = _Instance(m, r, limits)
    cover = CoverCertificate(r, tuple(instance.plane(p) for p in instance.min_cover()))
    verify_cover(m, cover)
    logger.debug("min %d-plane cover of %r: %d (%d nodes)", r, m, cover.size, instance.nodes)
    return cover


def max_rplane_matching(
    m: BinaryMultimatrix, r: int, limits: Limits = DEFAULT_LIMITS
) -> MatchingCertificate:
    """Most 1-cells with no two in one r-plane; the lexicographically least optimal set."""
    instance = _Instance(m, r, limits)
    matching = MatchingCertificate(r, tuple(instance.cells[c] for c in instance.max_matching()))
    verify_matching(m, matching)
    logger.debug("max %d-plane matching of %r: %d (%d nodes)", r, m, matching.size, instance.nodes)
    return matching


def min_line_cover(m: BinaryMultimatrix, limits: Limits = DEFAULT_LIMITS) -> CoverCertificate:
    return min_rplane_cover(m, 1, limits)


def max_line_matching(m: BinaryMultimatrix, limits: Limits = DEFAULT_LIMITS) -> MatchingCertificate:
    return max_rplane_matching(m, 1, limits)


def _as_plane(plane: Plane) -> RPlaneId:
    return plane.as_plane() if isinstance(plane, LineId) else plane


def verify_cover(m: BinaryMultimatrix, cover: CoverCertificate) -> None:
    """Every 1-cell lies in a listed plane; planes are distinct r-planes."""
    planes = [_as_plane(p) for p in cover.planes]
    if len(set(planes)) != len(planes):
        raise AssertionError("cover lists a plane twice")
    if any(p.r != cover.r for p in planes):
        raise AssertionError(f"cover mixes plane dimensions, expected r={cover.r}")
    listed = set(planes)
    for c in m.ones_coords():
        if not listed & set(planes_through(m.shape, cover.r, c)):
            raise AssertionError(f"1-cell {c} is not covered")


def verify_matching(m: BinaryMultimatrix, matching: MatchingCertificate) -> None:
    """Every listed cell is a 1 and no two share an r-plane."""
    seen: set[RPlaneId] = set()
    for c in matching.cells:
        if not m[c]:
            raise AssertionError(f"matched cell {c} holds 0")
        through = set(planes_through(m.shape, matching.r, c))
        if through & seen:
            raise AssertionError(f"matched cell {c} shares a {matching.r}-plane with another")
        seen |= through
