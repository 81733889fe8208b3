from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

import numpy as np

from multimatrix.core.shape import Coord, Shape
from multimatrix.exceptions import InputError


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class BinaryMultimatrix:
    """Immutable n-dimensional 0/1 array of extent k per axis.

    Cells are addressed with 1-based coordinates; `array` exposes the read-only
    boolean numpy storage (0-based).
    """

    __slots__ = ("shape", "array")

    def __init__(self, shape: Shape, array: np.ndarray) -> None:
        if array.shape != shape.dims:
            raise InputError(f"array of shape {array.shape} does not match {shape.dims}")
        self.shape = shape
        self.array = _frozen(np.array(array, dtype=bool))

    @classmethod
    def zeros(cls, shape: Shape) -> BinaryMultimatrix:
        return cls(shape, np.zeros(shape.dims, dtype=bool))

    @classmethod
    def ones(cls, shape: Shape) -> BinaryMultimatrix:
        return cls(shape, np.ones(shape.dims, dtype=bool))

    def __getitem__(self, coord: Coord) -> int:
        return int(self.array[self.shape.index(self.shape.check(coord))])

    def ones_coords(self) -> list[Coord]:
        """Coordinates of all 1-cells in dense file order."""
        return [tuple(int(i) + 1 for i in idx) for idx in np.argwhere(self.array)]

    def count(self) -> int:
        return int(self.array.sum())

    def with_cell(self, coord: Coord, value: int) -> BinaryMultimatrix:
        """Copy with one cell replaced."""
        array = self.array.copy()
        array[self.shape.index(self.shape.check(coord))] = bool(value)
        return BinaryMultimatrix(self.shape, array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMultimatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.array, other.array)

    def __hash__(self) -> int:
        return hash((self.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMultimatrix(n={self.shape.n}, k={self.shape.k}, ones={self.count()})"


class CostMultimatrix:
    """Immutable n-dimensional array of exact rational costs."""

    __slots__ = ("shape", "array")

    def __init__(self, shape: Shape, array: np.ndarray) -> None:
        if array.shape != shape.dims:
            raise InputError(f"array of shape {array.shape} does not match {shape.dims}")
        costs = np.empty(shape.dims, dtype=object)
        for idx, value in np.ndenumerate(array):
            costs[idx] = _to_fraction(value)
        self.shape = shape
        self.array = _frozen(costs)

    @classmethod
    def from_nested(cls, values: Sequence) -> CostMultimatrix:
        """Build from nested lists (or any array-like) of numbers or rational strings."""
        array = np.array(values, dtype=object)
        if array.ndim < 2 or len(set(array.shape)) != 1:
            raise InputError(f"cost array must be cubic with n >= 2, got shape {array.shape}")
        return cls(Shape(array.ndim, array.shape[0]), array)

    @classmethod
    def from_mapping(cls, shape: Shape, costs: Mapping[Coord, object]) -> CostMultimatrix:
        """Build from explicit cells; unlisted cells cost 0."""
        array = np.zeros(shape.dims, dtype=object)
        for coord, value in costs.items():
            array[shape.index(shape.check(coord))] = value
        return cls(shape, array)

    def __getitem__(self, coord: Coord) -> Fraction:
        return self.array[self.shape.index(self.shape.check(coord))]

    def shifted(self, delta: Fraction | int) -> CostMultimatrix:
        """Copy with `delta` added to every cell."""
        return CostMultimatrix(self.shape, self.array + Fraction(delta))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CostMultimatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.array == other.array))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.array.flat)))

    def __repr__(self) -> str:
        return f"CostMultimatrix(n={self.shape.n}, k={self.shape.k})"


def _to_fraction(value: object) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"cost {value!r} is a float; use an int, Fraction or 'p/q' string")
    try:
        return Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid cost {value!r}") from e


def from_entries(shape: Shape, ones: Iterable[Coord]) -> BinaryMultimatrix:
    """Binary multimatrix that is 1 exactly on `ones`.

    Raises:
        InputError: A coordinate is out of range for `shape`.
    """
    array = np.zeros(shape.dims, dtype=bool)
    for coord in ones:
        array[shape.index(shape.check(coord))] = True
    return BinaryMultimatrix(shape, array)


def pad_to_square(rows: Sequence[Sequence[int]]) -> BinaryMultimatrix:
    """Zero-pad an m x l acquaintance matrix (m <= l) to an l x l multimatrix."""
    if not rows:
        raise InputError("matrix has no rows")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise InputError("matrix rows have different lengths")
    if len(rows) > width:
        raise InputError(f"{len(rows)} rows exceed {width} columns; transpose the matrix first")
    if any(v not in (0, 1) for row in rows for v in row):
        raise InputError("matrix entries must be 0 or 1")
    array = np.zeros((width, width), dtype=bool)
    array[: len(rows)] = np.array(rows, dtype=bool)
    return BinaryMultimatrix(Shape(2, width), array)


def sub_multimatrix(m: BinaryMultimatrix, index_sets: Sequence[Sequence[int]]) -> BinaryMultimatrix:
    """Restriction of `m` to equal-size 1-based index subsets, one per axis."""
    shape = m.shape
    if len(index_sets) != shape.n:
        raise InputError(f"expected {shape.n} index sets, got {len(index_sets)}")
    sizes = {len(s) for s in index_sets}
    if len(sizes) != 1 or 0 in sizes:
        raise InputError("index sets must be non-empty and of equal size")
    for s in index_sets:
        if len(set(s)) != len(s) or any(not 1 <= i <= shape.k for i in s):
            raise InputError(f"index set {list(s)} is not a subset of 1..{shape.k}")
    picked = m.array[np.ix_(*[[i - 1 for i in s] for s in index_sets])]
    return BinaryMultimatrix(Shape(shape.n, sizes.pop()), picked)
