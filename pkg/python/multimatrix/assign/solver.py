from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from multimatrix.assign.reduction import reduce_slices
from multimatrix.core.matrix import CostMultimatrix
from multimatrix.det.monomial import term_count
from multimatrix.det.permutation import Permutation, PermutationTuple, all_tuples, support_of
from multimatrix.limits import DEFAULT_LIMITS, Limits, require

logger = logging.getLogger("multimatrix.assign")

# Feasible selections hold one cell per index value on every axis.
INTERPRETATION = "axial: feasible selections are permutation-tuple supports"


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    pruned: int
    root_bound: Fraction


@dataclass(frozen=True)
class Assignment:
    """k cells, one per index value on every axis, and their total cost."""

    tuple: PermutationTuple
    cost: Fraction
    stats: SearchStats | None = field(default=None, compare=False)


def assignment_cost(c: CostMultimatrix, t: PermutationTuple) -> Fraction:
    return sum((c[cell] for cell in support_of(c.shape, t)), Fraction(0))


def brute_force_assign(c: CostMultimatrix, limits: Limits = DEFAULT_LIMITS) -> Assignment:
    """Global optimum by full enumeration; ties go to the lexicographically least tuple.

    Raises:
        FeasibilityError: (k!)^(n-1) exceeds `limits.enumeration_budget`.
    """
    require("assignment enumeration", term_count(c.shape), limits.enumeration_budget)
    best: Assignment | None = None
    for t in all_tuples(c.shape):
        cost = assignment_cost(c, t)
        if best is None or cost < best.cost:
            best = Assignment(t, cost)
    assert best is not None
    return best


class _BranchAndBound:
    """Assigns axis-1 index j = 1..k in order, trying cells by reduced cost.

    The bound at a node is the accumulated cost plus the slice-reduction bound
    of the residual sub-instance (remaining rows, unused values per axis).
    Subtrees are cut only when the bound strictly exceeds the incumbent, so
    every optimum is reachable and ties resolve to the least tuple.
    """

    def __init__(self, c: CostMultimatrix) -> None:
        self.costs = c.array
        self.n = c.shape.n
        self.k = c.shape.k
        self.best: Assignment | None = None
        self.nodes = 0
        self.pruned = 0
        self.root_bound = Fraction(0)

    def _leaf(self, picks: list[tuple[int, ...]], cost: Fraction) -> None:
        t = PermutationTuple(
            tuple(
                Permutation(tuple(values[axis] + 1 for values in picks))
                for axis in range(self.n - 1)
            )
        )
        if self.best is None or (cost, t) < (self.best.cost, self.best.tuple):
            self.best = Assignment(t, cost)

    def visit(
        self, j: int, unused: list[list[int]], acc: Fraction, picks: list[tuple[int, ...]]
    ) -> None:
        self.nodes += 1
        if j == self.k:
            self._leaf(picks, acc)
            return

        residual = self.costs[np.ix_(range(j, self.k), *unused)]
        bound, reduced = reduce_slices(residual)
        if j == 0:
            self.root_bound = bound
        if self.best is not None and acc + bound > self.best.cost:
            self.pruned += 1
            return

        row = reduced[0]
        for position in sorted(np.ndindex(row.shape), key=lambda p: (row[p], p)):
            values = tuple(unused[axis][i] for axis, i in enumerate(position))
            rest = [u[:i] + u[i + 1 :] for u, i in zip(unused, position)]
            self.visit(j + 1, rest, acc + self.costs[(j, *values)], [*picks, values])


def solve_axial_map(c: CostMultimatrix, limits: Limits = DEFAULT_LIMITS) -> Assignment:
    """Exact axial assignment by branch-and-bound; agrees with `brute_force_assign`.

    Raises:
        FeasibilityError: k^n exceeds `limits.assign_cell_budget`.
    """
    require(
        "assignment branch-and-bound on k^n cells", c.shape.cells, limits.assign_cell_budget
    )
    search = _BranchAndBound(c)
    search.visit(0, [list(range(c.shape.k)) for _ in range(c.shape.n - 1)], Fraction(0), [])
    assert search.best is not None
    stats = SearchStats(search.nodes, search.pruned, search.root_bound)
    logger.debug(
        "assignment on n=%d k=%d: cost %s, %d nodes, %d pruned",
        c.shape.n,
        c.shape.k,
        search.best.cost,
        stats.nodes,
        stats.pruned,
    )
    return Assignment(search.best.tuple, search.best.cost, stats)
