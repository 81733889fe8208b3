from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from multimatrix.core.matrix import BinaryMultimatrix
from multimatrix.core.shape import Shape
from multimatrix.det.permutation import Permutation, PermutationTuple, support_of
from multimatrix.exceptions import InputError
from multimatrix.limits import DEFAULT_LIMITS, Limits, require

logger = logging.getLogger("multimatrix.det")


@dataclass(frozen=True)
class Monomial:
    """One term of the multideterminantal expansion."""

    tuple: PermutationTuple
    sign: int
    value: int


@dataclass(frozen=True)
class MonomialCount:
    """Exact count, or a lower bound when the enumeration stopped at `cap`."""

    count: int
    capped: bool = False

    def __str__(self) -> str:
        return f">= {self.count}" if self.capped else str(self.count)


def monomial(m: BinaryMultimatrix, t: PermutationTuple) -> Monomial:
    value = math.prod(m[c] for c in support_of(m.shape, t))
    return Monomial(t, t.sign, value)


class _Search:
    """Depth-first search for tuples whose support lies on 1-cells.

    Variables are assigned lambda_1(1..k), then lambda_2(1..k), and so on, each
    trying values in ascending order, so tuples come out in lexicographic order.
    A value for lambda_s(j) is admissible only if some 1-cell extends the prefix
    (j, lambda_1(j), ..., lambda_s(j)); after each step the remaining rows of the
    current stage must still admit a perfect matching onto the unused values.
    """

    def __init__(self, m: BinaryMultimatrix) -> None:
        n = m.shape.n
        self.k = m.shape.k
        self.stages = n - 1
        self.reach = [
            m.array.any(axis=tuple(range(s + 2, n))) if s + 2 < n else m.array
            for s in range(self.stages)
        ]
        self.images = [[-1] * self.k for _ in range(self.stages)]
        self.used = [[False] * self.k for _ in range(self.stages)]
        self.nodes = 0

    def _allowed(self, s: int, j: int, v: int) -> bool:
        prefix = tuple(self.images[q][j] for q in range(s))
        return bool(self.reach[s][(j, *prefix, v)])

    def _completable(self, s: int, start: int) -> bool:
        rows = range(start, self.k)
        free = [v for v in range(self.k) if not self.used[s][v]]
        owner: dict[int, int] = {}

        def augment(j: int, seen: set[int]) -> bool:
            for v in free:
                if v not in seen and self._allowed(s, j, v):
                    seen.add(v)
                    if v not in owner or augment(owner[v], seen):
                        owner[v] = j
                        return True
            return False

        return all(augment(j, set()) for j in rows)

    def _tuple(self) -> PermutationTuple:
        return PermutationTuple(
            tuple(Permutation(tuple(v + 1 for v in image)) for image in self.images)
        )

    def run(self) -> Iterator[PermutationTuple]:
        if self._completable(0, 0):
            yield from self._visit(0, 0)

    def _visit(self, s: int, j: int) -> Iterator[PermutationTuple]:
        self.nodes += 1
        if j == self.k:
            if s + 1 == self.stages:
                yield self._tuple()
            elif self._completable(s + 1, 0):
                yield from self._visit(s + 1, 0)
            return
        for v in range(self.k):
            if self.used[s][v] or not self._allowed(s, j, v):
                continue
            self.images[s][j] = v
            self.used[s][v] = True
            if self._completable(s, j + 1):
                yield from self._visit(s, j + 1)
            self.used[s][v] = False
        self.images[s][j] = -1


def iter_nonzero_monomials(m: BinaryMultimatrix) -> Iterator[PermutationTuple]:
    """Tuples with nonzero monomials, in lexicographic order (lambda_1 first)."""
    if not np.any(m.array):
        return iter(())
    return _Search(m).run()


def find_nonzero_monomial(m: BinaryMultimatrix) -> PermutationTuple | None:
    """Lexicographically least tuple whose support lies on 1-cells, if any."""
    found = next(iter_nonzero_monomials(m), None)
    logger.debug("monomial search on %r: %s", m, found)
    return found


def count_nonzero_monomials(m: BinaryMultimatrix, cap: int | None = None) -> MonomialCount:
    """Number of nonzero monomials, counting at most `cap` of them.

    `capped` is set only when a monomial beyond the cap exists.

    Raises:
        InputError: `cap` is negative.
    """
    if cap is not None and cap < 0:
        raise InputError(f"cap must be non-negative, got {cap}")
    count = 0
    for _ in iter_nonzero_monomials(m):
        if cap is not None and count >= cap:
            return MonomialCount(count, capped=True)
        count += 1
    return MonomialCount(count)


def term_count(shape: Shape) -> int:
    """(k!)^(n-1), the number of monomials in the full expansion."""
    return math.factorial(shape.k) ** (shape.n - 1)


def multideterminant(m: BinaryMultimatrix, limits: Limits = DEFAULT_LIMITS) -> int:
    """Signed sum over all (k!)^(n-1) monomials.

    Zero monomials contribute nothing, so only the nonzero ones are visited.

    Raises:
        FeasibilityError: (k!)^(n-1) exceeds `limits.term_limit`.
    """
    require("multideterminant expansion", term_count(m.shape), limits.term_limit)
    return sum(t.sign for t in iter_nonzero_monomials(m))
