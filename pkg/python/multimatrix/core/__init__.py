from multimatrix.core.codec import Multimatrix, digest, parse, serialize
from multimatrix.core.matrix import (
    BinaryMultimatrix,
    CostMultimatrix,
    from_entries,
    pad_to_square,
    sub_multimatrix,
)
from multimatrix.core.shape import (
    Coord,
    LineId,
    RPlaneId,
    Shape,
    cells_on_line,
    cells_on_plane,
    lines_of,
    planes_of,
    planes_through,
    same_line,
    same_rplane,
)

__all__ = [
    "BinaryMultimatrix",
    "Coord",
    "CostMultimatrix",
    "LineId",
    "Multimatrix",
    "RPlaneId",
    "Shape",
    "cells_on_line",
    "cells_on_plane",
    "digest",
    "from_entries",
    "lines_of",
    "pad_to_square",
    "parse",
    "planes_of",
    "planes_through",
    "same_line",
    "same_rplane",
    "serialize",
    "sub_multimatrix",
]
