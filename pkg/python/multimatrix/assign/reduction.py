from __future__ import annotations

from fractions import Fraction

import numpy as np

from multimatrix.core.matrix import CostMultimatrix


def reduce_slices(costs: np.ndarray) -> tuple[Fraction, np.ndarray]:
    """Subtract the minimum of every (n-1)-slice, axis by axis.

    Returns the sum of subtracted minima and the reduced copy. Every axial
    assignment meets each slice exactly once, so its cost on `costs` equals
    that sum plus its cost on the reduced array.
    """
    reduced = costs.copy()
    bound = Fraction(0)
    for axis in range(reduced.ndim):
        for t in range(reduced.shape[axis]):
            index = [slice(None)] * reduced.ndim
            index[axis] = t
            part = reduced[tuple(index)]
            low = min(part.flat)
            if low:
                reduced[tuple(index)] = part - low
                bound += low
    return bound, reduced


def reduction_bound(c: CostMultimatrix) -> tuple[Fraction, CostMultimatrix]:
    """Hungarian-style slice reduction generalized to n axes.

    Returns:
        The lower bound and the non-negative reduced instance, which has a zero
        in every slice {coordinate d = t}.
    """
    bound, reduced = reduce_slices(c.array)
    return bound, CostMultimatrix(c.shape, reduced)
