from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from multimatrix.core.shape import Coord, Shape
from multimatrix.exceptions import InputError


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1..k}; position j (1-based) maps to image[j-1]."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise InputError(f"{self.image} is not a permutation of 1..{len(self.image)}")

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @property
    def k(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.image)) + ")"


def signature(p: Permutation) -> int:
    """+1 for even permutations, -1 for odd ones (via cycle decomposition)."""
    seen = [False] * p.k
    transpositions = 0
    for start in range(p.k):
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p.image[j] - 1
            length += 1
        if length:
            transpositions += length - 1
    return -1 if transpositions % 2 else 1


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: j -> p(q(j))."""
    if p.k != q.k:
        raise InputError(f"cannot compose permutations of {p.k} and {q.k} symbols")
    return Permutation(tuple(p(q(j)) for j in range(1, q.k + 1)))


def permutations(k: int) -> Iterator[Permutation]:
    """All k! permutations in lexicographic image order."""
    for image in itertools.permutations(range(1, k + 1)):
        yield Permutation(image)


@dataclass(frozen=True, order=True)
class PermutationTuple:
    """(lambda_1, ..., lambda_{n-1}); orders lexicographically, lambda_1 first."""

    perms: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if not self.perms:
            raise InputError("a permutation tuple needs at least one permutation")
        if len({p.k for p in self.perms}) != 1:
            raise InputError("permutations in a tuple must act on the same k symbols")

    @classmethod
    def of(cls, *images: Sequence[int]) -> PermutationTuple:
        return cls(tuple(Permutation(tuple(image)) for image in images))

    @classmethod
    def identity(cls, shape: Shape) -> PermutationTuple:
        return cls((Permutation.identity(shape.k),) * (shape.n - 1))

    @property
    def k(self) -> int:
        return self.perms[0].k

    @property
    def sign(self) -> int:
        return math.prod(signature(p) for p in self.perms)

    def __str__(self) -> str:
        return " ".join(map(str, self.perms))


def all_tuples(shape: Shape) -> Iterator[PermutationTuple]:
    """All (k!)^(n-1) tuples in lexicographic order."""
    perms = list(permutations(shape.k))
    for combo in itertools.product(perms, repeat=shape.n - 1):
        yield PermutationTuple(combo)


def support_of(shape: Shape, t: PermutationTuple) -> list[Coord]:
    """The k cells (j, lambda_1(j), ..., lambda_{n-1}(j)) for j = 1..k."""
    if len(t.perms) != shape.n - 1 or t.k != shape.k:
        raise InputError(
            f"tuple of {len(t.perms)} permutations on {t.k} symbols does not fit "
            f"shape n={shape.n}, k={shape.k}"
        )
    return [(j, *(p(j) for p in t.perms)) for j in range(1, shape.k + 1)]
