"""Tests for partition sets and the Hurwitz solver."""

import itertools

import pytest

from graph_gonality.config import Config
from graph_gonality.data import load_partition_set
from graph_gonality.errors import DegreeCapError, PreconditionError
from graph_gonality.hurwitz import (
    PartitionSet,
    add_trivial,
    canonical_permutation,
    complete_with_simple,
    cycle_type,
    is_hurwitz_type,
    is_hurwitz_vertex,
    rh_genus,
    riemann_hurwitz_total,
)


def random_partition(rng, d: int) -> list[int]:
    parts = []
    left = d
    while left:
        part = rng.randint(1, left)
        parts.append(part)
        left -= part
    return parts


def brute_force_hurwitz(P: PartitionSet) -> bool:
    """Search every tuple of permutations with the prescribed cycle types."""
    d = P.degree
    by_type: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for perm in itertools.permutations(range(d)):
        by_type.setdefault(cycle_type(perm), []).append(perm)
    identity = tuple(range(d))
    for choice in itertools.product(*(by_type.get(p, []) for p in P.partitions)):
        product = identity
        for perm in choice:
            product = tuple(perm[i] for i in product)
        if product != identity:
            continue
        orbit, frontier = {0}, [0]
        while frontier:
            x = frontier.pop()
            for perm in choice:
                if perm[x] not in orbit:
                    orbit.add(perm[x])
                    frontier.append(perm[x])
        if len(orbit) == d:
            return True
    return False


class TestPartitionSet:
    """Tests for partition set bookkeeping."""

    def test_normalizes_parts(self):
        P = PartitionSet.of(4, [[1, 3], [2, 2]])
        assert P.partitions == ((3, 1), (2, 2))
        assert len(P) == 2
        assert P.to_json() == {"d": 4, "partitions": [[3, 1], [2, 2]]}

    def test_rejects_bad_partitions(self):
        with pytest.raises(PreconditionError):
            PartitionSet.of(3, [[2, 2]])
        with pytest.raises(PreconditionError):
            PartitionSet.of(0, [])
        with pytest.raises(PreconditionError):
            PartitionSet.of(2, [[2, 0]])

    def test_rh_genus(self):
        P = PartitionSet.of(4, [[3, 1], [2, 2], [2, 2]])
        assert riemann_hurwitz_total(P) == 6
        assert rh_genus(P).value == 0
        half = rh_genus(PartitionSet.of(2, [[2]]))
        assert half.half_integral
        assert half.value is None
        assert not half.consistent
        assert rh_genus(PartitionSet.of(3, [[1, 1, 1]])).negative

    def test_trivial_partitions_do_not_change_genus(self):
        P = PartitionSet.of(3, [[3], [3], [3]])
        assert rh_genus(add_trivial(P)) == rh_genus(P)
        assert add_trivial(P).partitions[-1] == (1, 1, 1)

    def test_complete_with_simple(self):
        completed = complete_with_simple(PartitionSet.of(3, [[3]]), 0)
        assert completed.partitions == ((3,), (2, 1), (2, 1))
        assert rh_genus(completed).value == 0
        assert complete_with_simple(PartitionSet.of(2, [[2], [2], [2], [2]]), 0) is None
        assert complete_with_simple(PartitionSet.of(1, [[1]]), 1) is None

    def test_permutations(self):
        perm = canonical_permutation((2, 3))
        assert perm == (1, 2, 0, 4, 3)
        assert cycle_type(perm) == (3, 2)
        assert cycle_type((0, 1, 2)) == (1, 1, 1)

    def test_load(self, fixtures_dir):
        P = load_partition_set(fixtures_dir / "hurk.json")
        assert P == PartitionSet.of(4, [[3, 1], [2, 2], [2, 2]])


class TestSolver:
    """Tests for Hurwitz existence."""

    def test_known_exception(self):
        P = PartitionSet.of(4, [[3, 1], [2, 2], [2, 2]])
        assert rh_genus(P).value == 0
        result = is_hurwitz_type(P)
        assert result.decision is False
        assert result.witness is None

    def test_too_little_ramification(self):
        assert not is_hurwitz_type(PartitionSet.of(4, [[2, 2], [2, 2]])).decision
        assert not is_hurwitz_type(PartitionSet.of(3, [[3]])).decision

    def test_three_cycles(self):
        P = PartitionSet.of(3, [[3], [3], [3]])
        result = is_hurwitz_type(P)
        assert result.decision
        assert result.witness.verify(P)

    def test_double_cover_witness(self):
        P = PartitionSet.of(2, [[2], [2]])
        result = is_hurwitz_type(P)
        assert result.decision
        assert result.witness.cycle_notation() == ["(1 2)", "(1 2)"]

    def test_degree_one(self):
        result = is_hurwitz_type(PartitionSet.of(1, [[1], [1]]))
        assert result.decision
        assert result.witness.permutations == ((0,), (0,))

    def test_degree_cap(self):
        P = PartitionSet.of(4, [[2, 2], [2, 2], [2, 2], [2, 2]])
        with pytest.raises(DegreeCapError):
            is_hurwitz_type(P, config=Config(hurwitz_degree_cap=3))

    def test_counting_shortcut(self):
        P = PartitionSet.of(4, [[2, 1, 1]] * 6)
        assert is_hurwitz_type(P, witness=False).decision
        assert is_hurwitz_type(P).decision

    def test_witnesses_verify(self, rng):
        for _ in range(60):
            d = rng.randint(2, 5)
            P = PartitionSet.of(d, [random_partition(rng, d) for _ in range(rng.randint(2, 4))])
            result = is_hurwitz_type(P)
            assert result.decision == is_hurwitz_type(P, witness=False).decision
            if result.decision:
                assert result.witness.verify(P)
                assert rh_genus(P).consistent

    def test_small_degrees_match_brute_force(self):
        for d in range(1, 4):
            shapes = sorted({cycle_type(perm) for perm in itertools.permutations(range(d))})
            for b in range(1, 6):
                for partitions in itertools.combinations_with_replacement(shapes, b):
                    P = PartitionSet.of(d, partitions)
                    decision = is_hurwitz_type(P).decision
                    assert decision == brute_force_hurwitz(P)
                    # below degree 4 the genus formula is the only obstruction
                    assert decision == rh_genus(P).consistent

    def test_order_of_partitions_is_irrelevant(self, rng):
        for _ in range(60):
            d = rng.randint(2, 5)
            parts = [random_partition(rng, d) for _ in range(rng.randint(2, 5))]
            P = PartitionSet.of(d, parts)
            shuffled = parts[:]
            rng.shuffle(shuffled)
            Q = PartitionSet.of(d, shuffled)
            result = is_hurwitz_type(Q)
            assert result.decision == is_hurwitz_type(P).decision
            if result.decision:
                assert result.witness.verify(Q)

    def test_vertex_completion(self):
        # degree at most 3 is decided by the genus alone
        assert is_hurwitz_vertex(PartitionSet.of(3, [[3], [2, 1]]), 1)
        assert not is_hurwitz_vertex(PartitionSet.of(2, [[2]] * 6), 1)
        assert not is_hurwitz_vertex(PartitionSet.of(4, [[3, 1], [2, 2], [2, 2]]), 0)
        assert is_hurwitz_vertex(PartitionSet.of(4, [[3, 1], [2, 2], [2, 2]]), 1)
