"""Tests for permutations, tuples and supports."""

import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from multimatrix.core import Shape, same_line
from multimatrix.det import (
    Permutation,
    PermutationTuple,
    all_tuples,
    compose,
    permutations,
    signature,
    support_of,
)
from multimatrix.exceptions import InputError


class TestPermutation:
    """Permutation basics and signatures."""

    def test_rejects_non_bijection(self):
        """Images must be a rearrangement of 1..k."""
        with pytest.raises(InputError, match="not a permutation"):
            Permutation((1, 1, 2))

    def test_call_is_one_based(self):
        """p(j) is image[j - 1]."""
        p = Permutation((2, 3, 1))
        assert [p(j) for j in (1, 2, 3)] == [2, 3, 1]

    @pytest.mark.parametrize(
        "image,sign",
        [((1, 2, 3), 1), ((2, 1), -1), ((2, 3, 1), 1), ((1, 3, 2), -1), ((4, 3, 2, 1), 1)],
    )
    def test_signature(self, image, sign):
        """Parity from the cycle decomposition."""
        assert signature(Permutation(image)) == sign

    def test_permutations_lex_order(self):
        """k! permutations in lexicographic image order."""
        images = [p.image for p in permutations(3)]
        assert images == sorted(images)
        assert len(images) == 6

    def test_compose(self):
        """compose(p, q) applies q first."""
        p, q = Permutation((2, 1, 3)), Permutation((1, 3, 2))
        assert compose(p, q) == Permutation((2, 3, 1))

    @given(
        st.integers(1, 6).flatmap(
            lambda k: st.tuples(
                st.permutations(range(1, k + 1)), st.permutations(range(1, k + 1))
            )
        )
    )
    def test_signature_multiplicative(self, images):
        """sgn(p o q) = sgn(p) sgn(q)."""
        p, q = (Permutation(tuple(i)) for i in images)
        assert signature(compose(p, q)) == signature(p) * signature(q)


class TestSupport:
    """Diagonal supports of permutation tuples."""

    def test_identity_is_main_diagonal(self):
        """n = 2 identity selects the diagonal."""
        t = PermutationTuple.identity(Shape(2, 3))
        assert support_of(Shape(2, 3), t) == [(1, 1), (2, 2), (3, 3)]

    def test_swap_identity(self):
        """(swap, identity) on 2x2x2."""
        t = PermutationTuple.of((2, 1), (1, 2))
        assert support_of(Shape(3, 2), t) == [(1, 2, 1), (2, 1, 2)]

    @pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (3, 3)])
    def test_supports_are_transversals(self, n, k):
        """Support cells differ in every axis, so no two share a line."""
        shape = Shape(n, k)
        for t in all_tuples(shape):
            cells = support_of(shape, t)
            assert len(cells) == k
            for axis in range(n):
                assert {c[axis] for c in cells} == set(range(1, k + 1))
            assert not any(same_line(shape, p, q) for p, q in itertools.combinations(cells, 2))

    def test_tuple_must_fit_shape(self):
        """n - 1 permutations on k symbols."""
        with pytest.raises(InputError, match="does not fit"):
            support_of(Shape(3, 2), PermutationTuple.of((1, 2)))

    def test_tuple_sign(self):
        """Tuple sign is the product of signatures."""
        assert PermutationTuple.of((2, 1), (2, 1)).sign == 1
        assert PermutationTuple.of((2, 1), (1, 2)).sign == -1


class TestAllTuples:
    """Enumeration of all tuples."""

    @pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (3, 3), (4, 2)])
    def test_count(self, n, k):
        """(k!)^(n-1) tuples, all distinct, in increasing order."""
        tuples = list(all_tuples(Shape(n, k)))
        assert len(tuples) == len(set(tuples))
        assert tuples == sorted(tuples)
        assert len(tuples) == factorial(k) ** (n - 1)
