from multimatrix.det.monomial import (
    Monomial,
    MonomialCount,
    count_nonzero_monomials,
    find_nonzero_monomial,
    iter_nonzero_monomials,
    monomial,
    multideterminant,
    term_count,
)
from multimatrix.det.permutation import (
    Permutation,
    PermutationTuple,
    all_tuples,
    compose,
    permutations,
    signature,
    support_of,
)

__all__ = [
    "Monomial",
    "MonomialCount",
    "Permutation",
    "PermutationTuple",
    "all_tuples",
    "compose",
    "count_nonzero_monomials",
    "find_nonzero_monomial",
    "iter_nonzero_monomials",
    "monomial",
    "multideterminant",
    "permutations",
    "signature",
    "support_of",
    "term_count",
]
