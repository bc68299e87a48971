"""Partition sets and Riemann-Hurwitz bookkeeping."""

from collections.abc import Iterable
from dataclasses import dataclass

from ..errors import PreconditionError

Partition = tuple[int, ...]
Permutation = tuple[int, ...]  # images of 0..d-1


def normalize(parts: Iterable[int]) -> Partition:
    return tuple(sorted((int(p) for p in parts), reverse=True))


@dataclass(frozen=True)
class PartitionSet:
    """A multiset of partitions of one positive integer ``degree``."""

    degree: int
    partitions: tuple[Partition, ...]

    @classmethod
    def of(cls, degree: int, partitions: Iterable[Iterable[int]]) -> "PartitionSet":
        """Normalize and check a partition set.

        Raises:
            PreconditionError: If the degree is not positive, a part is not
                positive or a partition does not sum to the degree.
        """
        if degree < 1:
            raise PreconditionError(f"partition sets need a positive degree, got {degree}")
        normalized = tuple(normalize(p) for p in partitions)
        for p in normalized:
            if not p or min(p) < 1 or sum(p) != degree:
                raise PreconditionError(f"{list(p)} is not a partition of {degree}")
        return cls(degree, normalized)

    def __len__(self) -> int:
        return len(self.partitions)

    def to_json(self) -> dict:
        return {"d": self.degree, "partitions": [list(p) for p in self.partitions]}


def ramification(partition: Partition) -> int:
    """Sum of ``r - 1`` over the parts."""
    return sum(r - 1 for r in partition)


def riemann_hurwitz_total(P: PartitionSet) -> int:
    return sum(ramification(p) for p in P.partitions)


@dataclass(frozen=True)
class RHGenus:
    """Solution of ``2g - 2 = -2d + total ramification``."""

    twice_genus: int

    @property
    def half_integral(self) -> bool:
        return self.twice_genus % 2 == 1

    @property
    def negative(self) -> bool:
        return self.twice_genus < 0

    @property
    def value(self) -> int | None:
        """The genus when it is a non-negative integer."""
        if self.half_integral or self.negative:
            return None
        return self.twice_genus // 2

    @property
    def consistent(self) -> bool:
        return self.value is not None


def rh_genus(P: PartitionSet) -> RHGenus:
    return RHGenus(riemann_hurwitz_total(P) - 2 * P.degree + 2)


def trivial_partition(d: int) -> Partition:
    return (1,) * d


def simple_partition(d: int) -> Partition:
    """The cycle type of a transposition."""
    return (2,) + (1,) * (d - 2)


def add_trivial(P: PartitionSet) -> PartitionSet:
    return PartitionSet(P.degree, P.partitions + (trivial_partition(P.degree),))


def simple_deficit(P: PartitionSet, genus: int) -> int:
    """Number of transpositions needed to reach the given genus (may be negative)."""
    return 2 * (P.degree - 1 + genus) - riemann_hurwitz_total(P)


def complete_with_simple(P: PartitionSet, genus: int) -> PartitionSet | None:
    """Append transposition types until the set has the given genus.

    Returns:
        The completed set, or None when no completion exists: the set
        already carries too much ramification, or transpositions are needed
        in degree 1.
    """
    if genus < 0:
        raise PreconditionError(f"target genus must be non-negative, got {genus}")
    k = simple_deficit(P, genus)
    if k < 0 or (k > 0 and P.degree == 1):
        return None
    return PartitionSet(P.degree, P.partitions + (simple_partition(P.degree),) * k)


def cycle_type(perm: Permutation) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, point = 0, start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            length += 1
        lengths.append(length)
    return normalize(lengths)


def canonical_permutation(partition: Partition) -> Permutation:
    """Cycles in decreasing length over consecutive points."""
    images: list[int] = []
    start = 0
    for length in normalize(partition):
        images += [start + (i + 1) % length for i in range(length)]
        start += length
    return tuple(images)
