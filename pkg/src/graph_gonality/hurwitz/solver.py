"""Hurwitz existence: permutations of given cycle types with identity product.

The search fixes the first permutation to the canonical representative of
its conjugacy class and sweeps the remaining levels breadth first over
states ``(partial product, orbit partition)``. States are deduplicated, so
the work is bounded by the number of reachable states rather than by the
number of tuples. The last permutation is forced as the inverse of the
partial product.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from ..config import Config, resolve
from ..errors import DegreeCapError
from .partitions import (
    Partition,
    PartitionSet,
    Permutation,
    canonical_permutation,
    complete_with_simple,
    cycle_type,
    ramification,
    riemann_hurwitz_total,
)

log = logging.getLogger(__name__)

Orbits = tuple[int, ...]  # smallest point of the orbit of each point


@dataclass(frozen=True)
class HurwitzWitness:
    """Permutations of ``0..d-1`` realizing a partition set."""

    degree: int
    permutations: tuple[Permutation, ...]

    def cycle_notation(self) -> list[str]:
        """One-line cycle notation on the points ``1..d``."""
        rendered = []
        for perm in self.permutations:
            cycles = SymPermutation(list(perm)).cyclic_form
            rendered.append("".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles) or "()")
        return rendered

    def verify(self, P: PartitionSet) -> bool:
        """Cycle types match, the product is the identity and the group is transitive."""
        if len(self.permutations) != len(P.partitions):
            return False
        if any(cycle_type(s) != p for s, p in zip(self.permutations, P.partitions)):
            return False
        product = tuple(range(self.degree))
        for s in self.permutations:
            product = compose(product, s)
        if product != tuple(range(self.degree)):
            return False
        if self.degree == 1:
            return True
        group = PermutationGroup([SymPermutation(list(s)) for s in self.permutations] or [SymPermutation(self.degree - 1)])
        return group.is_transitive()


@dataclass(frozen=True)
class HurwitzResult:
    decision: bool
    witness: HurwitzWitness | None = None
    states: int = 0


def compose(p: Permutation, s: Permutation) -> Permutation:
    """``p`` after ``s``."""
    return tuple(p[x] for x in s)


def inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for x, y in enumerate(p):
        result[y] = x
    return tuple(result)


def merge_orbits(orbits: Orbits, perm: Permutation) -> Orbits:
    labels = list(orbits)

    def find(x: int) -> int:
        while labels[x] != x:
            x = labels[x]
        return x

    for x, y in enumerate(perm):
        rx, ry = find(x), find(y)
        if rx != ry:
            labels[max(rx, ry)] = min(rx, ry)
    return tuple(find(x) for x in range(len(labels)))


def count_orbits(orbits: Orbits) -> int:
    return sum(1 for x, label in enumerate(orbits) if x == label)


@lru_cache(maxsize=128)
def conjugacy_class(partition: Partition) -> tuple[Permutation, ...]:
    """All permutations of the given cycle type, in lexicographic order."""
    d = sum(partition)
    return tuple(p for p in itertools.permutations(range(d)) if cycle_type(p) == partition)


def _obviously_realizable(P: PartitionSet) -> bool:
    # transpositions with an even count of at least 2(d - 1) always work
    total = riemann_hurwitz_total(P)
    return all(ramification(p) <= 1 for p in P.partitions) and total % 2 == 0 and total >= 2 * (P.degree - 1)


def is_hurwitz_type(P: PartitionSet, witness: bool = True, config: Config | None = None) -> HurwitzResult:
    """Decide whether ``P`` is a Hurwitz partition set.

    Args:
        P: The partition set.
        witness: Search for and return permutations. Without it, sets of
            transposition types are decided by counting alone.
        config: Supplies the degree cap.

    Raises:
        DegreeCapError: If the degree exceeds the configured cap.
    """
    d = P.degree
    cap = resolve(config).hurwitz_degree_cap
    if d > cap:
        raise DegreeCapError(f"degree {d} exceeds the Hurwitz solver cap {cap}")
    identity = tuple(range(d))
    if d == 1:
        return HurwitzResult(True, HurwitzWitness(1, tuple(identity for _ in P.partitions)) if witness else None)
    total = riemann_hurwitz_total(P)
    if total % 2 or total < 2 * (d - 1) or not P.partitions:
        return HurwitzResult(False)
    if not witness and _obviously_realizable(P):
        return HurwitzResult(True)

    partitions = P.partitions
    first = canonical_permutation(partitions[0])
    if len(partitions) == 1:
        # a single permutation with identity product is the identity
        return HurwitzResult(False)
    remaining = [sum(ramification(p) for p in partitions[i:]) for i in range(len(partitions) + 1)]
    start = (first, merge_orbits(identity, first))
    levels: list[dict[tuple[Permutation, Orbits], tuple]] = [{start: ()}]
    for i in range(1, len(partitions) - 1):
        layer: dict[tuple[Permutation, Orbits], tuple] = {}
        for product, orbits in levels[-1]:
            for sigma in conjugacy_class(partitions[i]):
                merged = merge_orbits(orbits, sigma)
                if count_orbits(merged) - 1 > remaining[i + 1]:
                    continue
                state = (compose(product, sigma), merged)
                if state not in layer:
                    layer[state] = ((product, orbits), sigma)
        levels.append(layer)
        log.debug("hurwitz level %d: %d states", i, len(layer))
        if not layer:
            return HurwitzResult(False, states=sum(map(len, levels)))
    last_type = partitions[-1]
    for state in levels[-1]:
        product, orbits = state
        closing = inverse(product)
        if cycle_type(closing) != last_type or count_orbits(merge_orbits(orbits, closing)) != 1:
            continue
        states = sum(map(len, levels))
        if not witness:
            return HurwitzResult(True, states=states)
        chain = [closing]
        for level in range(len(levels) - 1, 0, -1):
            state, sigma = levels[level][state]
            chain.append(sigma)
        chain.append(first)
        return HurwitzResult(True, HurwitzWitness(d, tuple(reversed(chain))), states)
    return HurwitzResult(False, states=sum(map(len, levels)))


def is_hurwitz_vertex(P: PartitionSet, genus: int, config: Config | None = None) -> bool:
    """Whether ``P`` sits inside a Hurwitz set of the given genus, completing with transpositions.

    Degrees up to 3 skip the permutation search: there every set with a
    consistent Riemann-Hurwitz genus is realizable.
    """
    completed = complete_with_simple(P, genus)
    if completed is None:
        return False
    if P.degree <= 3:
        return True
    return is_hurwitz_type(completed, witness=False, config=config).decision
