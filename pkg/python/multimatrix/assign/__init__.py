from multimatrix.assign.reduction import reduce_slices, reduction_bound
from multimatrix.assign.solver import (
    INTERPRETATION,
    Assignment,
    SearchStats,
    assignment_cost,
    brute_force_assign,
    solve_axial_map,
)

__all__ = [
    "INTERPRETATION",
    "Assignment",
    "SearchStats",
    "assignment_cost",
    "brute_force_assign",
    "reduce_slices",
    "reduction_bound",
    "solve_axial_map",
]
