from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from multimatrix.exceptions import FeasibilityError


@dataclass(frozen=True)
class Limits:
    """Size guards and enumeration budgets shared by all solvers.

    Attributes:
        cell_budget: Largest k^n handled by the minimax subset searches.
        assign_cell_budget: Largest k^n held in memory by assignment branch-and-bound.
        term_limit: Largest (k!)^(n-1) accepted by the full multideterminant.
        enumeration_budget: Largest tuple count for brute-force assignment.
        scan_budget: Largest instance count of an exhaustive gap scan.
        vertex_guard: Largest vertex count for brute-force graph solvers.
        workers: Process pool size for scans and hunts (0 runs inline).
    """

    cell_budget: int = 81
    assign_cell_budget: int = 1_000_000
    term_limit: int = 10_000_000
    enumeration_budget: int = 1_000_000
    scan_budget: int = 65_536
    vertex_guard: int = 14
    workers: int = 0

    def replace(self, **changes: int) -> Limits:
        return dataclasses.replace(self, **changes)


DEFAULT_LIMITS = Limits()


def require(what: str, required: int, limit: int) -> None:
    """Raise FeasibilityError when `required` exceeds `limit`."""
    if required > limit:
        raise FeasibilityError(what, required, limit)
