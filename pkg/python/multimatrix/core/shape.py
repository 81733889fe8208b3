from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from multimatrix.exceptions import InputError

Coord = tuple[int, ...]
"""1-based index tuple (i_1, ..., i_n)."""


@dataclass(frozen=True, order=True)
class Shape:
    """Cubic multimatrix shape: n axes of extent k each."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise InputError(f"dimension count must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InputError(f"extent must be an integer >= 1, got {self.k!r}")

    @property
    def cells(self) -> int:
        return self.k**self.n

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.k,) * self.n

    def check(self, coord: Iterable[int]) -> Coord:
        """Validate a coordinate and return it as a tuple.

        Raises:
            InputError: Wrong length or a component outside 1..k.
        """
        c = tuple(coord)
        if len(c) != self.n or any(not isinstance(i, int) or not 1 <= i <= self.k for i in c):
            raise InputError(f"coordinate {c} is not valid for shape n={self.n}, k={self.k}")
        return c

    def coords(self) -> Iterator[Coord]:
        """All coordinates in dense file order (last coordinate varies fastest)."""
        return itertools.product(range(1, self.k + 1), repeat=self.n)

    def index(self, coord: Coord) -> tuple[int, ...]:
        """0-based array index of a validated coordinate."""
        return tuple(i - 1 for i in coord)


@dataclass(frozen=True, order=True)
class RPlaneId:
    """Coordinate r-plane: `free_axes` vary, the remaining axes hold `fixed` values.

    Axes are 1-based; `fixed` lists values for the non-free axes in ascending axis order.
    """

    free_axes: tuple[int, ...]
    fixed: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.free_axes)

    def as_line(self) -> LineId:
        if self.r != 1:
            raise InputError(f"{self} is a {self.r}-plane, not a line")
        return LineId(self.free_axes[0], self.fixed)

    def __str__(self) -> str:
        axes = ",".join(map(str, self.free_axes))
        return f"plane axes={axes} fixed=({','.join(map(str, self.fixed))})"


@dataclass(frozen=True, order=True)
class LineId:
    """Line with one free axis; `fixed` holds the other n-1 values in axis order."""

    axis: int
    fixed: tuple[int, ...]

    def as_plane(self) -> RPlaneId:
        return RPlaneId((self.axis,), self.fixed)

    def __str__(self) -> str:
        return f"line axis={self.axis} fixed=({','.join(map(str, self.fixed))})"


def check_r(shape: Shape, r: int) -> int:
    if not isinstance(r, int) or not 1 <= r <= shape.n:
        raise InputError(f"r must be in 1..{shape.n}, got {r!r}")
    return r


def planes_of(shape: Shape, r: int) -> list[RPlaneId]:
    """All r-planes: free-axis sets in combination order, then lexicographic fixed values."""
    check_r(shape, r)
    values = range(1, shape.k + 1)
    return [
        RPlaneId(free, fixed)
        for free in itertools.combinations(range(1, shape.n + 1), r)
        for fixed in itertools.product(values, repeat=shape.n - r)
    ]


def lines_of(shape: Shape) -> list[LineId]:
    """All n*k^(n-1) lines, ascending axis then lexicographic fixed indices."""
    return [plane.as_line() for plane in planes_of(shape, 1)]


def _check_plane(shape: Shape, plane: RPlaneId) -> None:
    free = plane.free_axes
    if (
        not free
        or list(free) != sorted(set(free))
        or free[0] < 1
        or free[-1] > shape.n
        or len(plane.fixed) != shape.n - len(free)
        or any(not 1 <= v <= shape.k for v in plane.fixed)
    ):
        raise InputError(f"{plane} is not valid for shape n={shape.n}, k={shape.k}")


def cells_on_plane(shape: Shape, plane: RPlaneId) -> list[Coord]:
    """The k^r coordinates of an r-plane in dense file order."""
    _check_plane(shape, plane)
    free = set(plane.free_axes)
    cells = []
    for varying in itertools.product(range(1, shape.k + 1), repeat=plane.r):
        it_free, it_fixed = iter(varying), iter(plane.fixed)
        axes = range(1, shape.n + 1)
        cells.append(tuple(next(it_free) if a in free else next(it_fixed) for a in axes))
    return cells


def cells_on_line(shape: Shape, line: LineId) -> list[Coord]:
    """The k coordinates of a line, ascending along the free axis."""
    return cells_on_plane(shape, line.as_plane())


def planes_through(shape: Shape, r: int, coord: Coord) -> list[RPlaneId]:
    """The C(n, r) r-planes containing a coordinate, in planes_of order."""
    check_r(shape, r)
    return [
        RPlaneId(free, tuple(coord[a - 1] for a in range(1, shape.n + 1) if a not in free))
        for free in itertools.combinations(range(1, shape.n + 1), r)
    ]


def agreements(p: Coord, q: Coord) -> int:
    return sum(a == b for a, b in zip(p, q))


def same_rplane(shape: Shape, r: int, p: Coord, q: Coord) -> bool:
    """True iff p != q and some r-plane holds both (they agree in >= n-r positions)."""
    check_r(shape, r)
    p, q = shape.check(p), shape.check(q)
    return p != q and agreements(p, q) >= shape.n - r


def same_line(shape: Shape, p: Coord, q: Coord) -> bool:
    """True iff p and q differ in exactly one position. Irreflexive."""
    return same_rplane(shape, 1, p, q)
