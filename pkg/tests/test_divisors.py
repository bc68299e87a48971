"""Tests for divisors, linear equivalence and rank."""

import pytest

from graph_gonality.config import Config
from graph_gonality.divisors import (
    ChipFiringGraph,
    Divisor,
    W_r_d,
    brute_force_rank,
    canonical_divisor,
    divisorial_gonality,
    enumerate_classes,
    is_divisorially_gonal,
    is_equivalent,
    jacobian_order,
    laplacian,
    picard_class,
    rank,
    reduce,
    smith_invariants,
    transport,
)
from graph_gonality.divisors.chipfiring import engine
from graph_gonality.errors import EnumerationCapError, PreconditionError, UnknownVertexError
from graph_gonality.graph import (
    banana,
    divisorial_trigonal,
    genus,
    path,
    random_graph,
    trigonal_chain,
    weightless_model,
)


def random_divisor(rng, g, low: int, high: int) -> Divisor:
    """A divisor of random degree in ``low..high`` spread over random vertices."""
    degree = rng.randint(low, high)
    coeffs = {v: 0 for v in g.vertices}
    for _ in range(abs(degree)):
        coeffs[rng.choice(g.vertices)] += 1 if degree > 0 else -1
    # shuffle chips without changing the degree
    for _ in range(2):
        a, b = rng.choice(g.vertices), rng.choice(g.vertices)
        coeffs[a] += 1
        coeffs[b] -= 1
    return Divisor.on(g, coeffs)


class TestDivisor:
    """Tests for divisor arithmetic."""

    def test_construction(self):
        g = banana(3)
        D = Divisor.point(g, "v1", 2) + Divisor.point(g, "v2")
        assert D.degree == 3
        assert D.values == (2, 1)
        assert D["v1"] == 2
        assert D.is_effective
        assert D.support == ("v1", "v2")
        assert str(D) == "2*v1 + v2"

    def test_negative_terms_render(self):
        D = Divisor.on(banana(2), {"v1": 1, "v2": -1})
        assert str(D) == "v1 - 1*v2"
        assert not D.is_effective
        assert str(Divisor.zero(banana(2))) == "0"

    def test_scalar_and_negation(self):
        g = banana(2)
        D = Divisor.on(g, {"v1": 1, "v2": 2})
        assert (2 * D).values == (2, 4)
        assert (-D).degree == -3
        assert (D - D) == Divisor.zero(g)

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            Divisor.on(banana(2), {"v9": 1})

    def test_different_vertex_sets(self):
        with pytest.raises(PreconditionError):
            Divisor.zero(banana(2)) + Divisor.zero(path(3))

    def test_canonical_divisor(self):
        assert canonical_divisor(banana(3)).values == (1, 1)
        K = canonical_divisor(banana(2, 0, 1))
        assert K.values == (0, 2)
        for g in (banana(3), trigonal_chain(), divisorial_trigonal(), banana(4, 1, 2)):
            assert canonical_divisor(g).degree == 2 * genus(g) - 2

    def test_transport_to_weightless_model(self):
        g = banana(2, 0, 1)
        D = transport(g, Divisor.point(g, "v2", 2))
        assert D.vertices == ("v1", "v2", "w:v2:1")
        assert D.values == (0, 2, 0)


class TestLaplacian:
    """Tests for the Laplacian and the Jacobian."""

    def test_laplacian_rows_sum_to_zero(self):
        lap = laplacian(trigonal_chain())
        assert lap.shape == (4, 4)
        assert lap.sum(axis=1).tolist() == [0, 0, 0, 0]
        assert lap[0, 0] == 3
        assert lap[1, 2] == -2

    def test_jacobian_order(self):
        assert jacobian_order(path(3)) == 1
        assert jacobian_order(banana(3)) == 3
        assert jacobian_order(trigonal_chain()) == 18
        # a subdivided loop contributes a factor 2
        assert jacobian_order(banana(2, 0, 1)) == 4

    def test_smith_invariants_multiply_to_order(self):
        for g in (banana(3), trigonal_chain(), divisorial_trigonal(), banana(2, 1, 1)):
            product = 1
            for value in smith_invariants(g):
                product *= value
            assert product == jacobian_order(g)
        assert smith_invariants(banana(3)) == [3]


class TestEquivalence:
    """Tests for reduction and linear equivalence."""

    def test_reduce_fires_toward_base(self):
        g = banana(3)
        reduced = reduce(g, Divisor.point(g, "v2", 3), "v1")
        assert reduced.values == (3, 0)

    def test_reduce_unknown_base(self):
        g = banana(3)
        with pytest.raises(UnknownVertexError):
            reduce(g, Divisor.zero(g), "v9")

    def test_chip_firing_needs_weightless(self):
        with pytest.raises(PreconditionError):
            ChipFiringGraph(banana(2, 0, 1))

    def test_is_equivalent(self):
        g = banana(3)
        assert is_equivalent(g, Divisor.point(g, "v1", 3), Divisor.point(g, "v2", 3))
        assert not is_equivalent(g, Divisor.point(g, "v1", 2), Divisor.point(g, "v2", 2))
        assert not is_equivalent(g, Divisor.point(g, "v1", 2), Divisor.point(g, "v1"))

    def test_weighted_equivalence(self):
        g = banana(2, 0, 1)
        assert is_equivalent(g, Divisor.point(g, "v1", 2), Divisor.point(g, "v2", 2))

    def test_picard_class_is_a_class_invariant(self):
        g = trigonal_chain()
        a = picard_class(g, Divisor.point(g, "v1", 3))
        b = picard_class(g, Divisor.point(g, "v2", 3))
        assert a.degree == 3
        assert (a == b) == is_equivalent(g, Divisor.point(g, "v1", 3), Divisor.point(g, "v2", 3))


class TestRank:
    """Tests for the rank of divisors."""

    def test_banana_ranks(self):
        for n in range(2, 6):
            g = banana(n)
            assert rank(g, Divisor.on(g, {"v1": 1, "v2": 1})) == 1
            assert rank(g, Divisor.point(g, "v1", 2)) == (1 if n == 2 else 0)

    def test_weighted_banana_ranks(self):
        for n in range(2, 6):
            g = banana(n, 0, 1)
            assert rank(g, Divisor.point(g, "v1", 2)) == (1 if n == 2 else 0)
            model = weightless_model(g)
            u = "w:v2:1"
            assert rank(model, Divisor.on(model, {"v1": 1, "v2": 1})) == 0
            assert rank(model, Divisor.on(model, {u: 1, "v1": 1})) == 0
            assert rank(model, Divisor.on(model, {u: 1, "v2": 1})) == 0

    def test_non_effective_class(self):
        g = banana(3)
        assert rank(g, Divisor.point(g, "v1", -1)) == -1
        assert rank(g, Divisor.on(g, {"v1": 1, "v2": -1})) == -1
        assert rank(g, Divisor.zero(g)) == 0

    def test_above_canonical_degree(self):
        g = trigonal_chain()
        D = Divisor.point(g, "v4", 2 * genus(g) - 1)
        assert rank(g, D) == D.degree - genus(g)

    def test_riemann_roch(self, rng):
        for _ in range(1000):
            g = random_graph(rng, max_vertices=6, max_edges=9, max_weight=2)
            gen = genus(g)
            D = random_divisor(rng, g, -3, 2 * gen + 2)
            K = canonical_divisor(g)
            assert rank(g, D) - rank(g, K - D) == D.degree - gen + 1

    def test_canonical_rank(self, rng):
        for _ in range(300):
            g = random_graph(rng, max_vertices=6, max_edges=9, max_weight=2)
            gen = genus(g)
            if gen >= 1:
                assert rank(g, canonical_divisor(g)) == gen - 1

    def test_rank_memo_is_bounded(self, rng):
        chips = ChipFiringGraph(trigonal_chain())
        chips.memo_limit = 8
        for _ in range(50):
            D = random_divisor(rng, trigonal_chain(), 0, 4)
            chips.rank(D.values)
            assert len(chips._memo) <= 8
        assert engine.cache_info().maxsize is not None

    def test_matches_brute_force_oracle(self, rng):
        checked = 0
        while checked < 200:
            g = random_graph(rng, max_vertices=6, max_edges=9, max_weight=2)
            if jacobian_order(g) > 2000:
                continue
            checked += 1
            for _ in range(5):
                D = random_divisor(rng, g, -1, 2 * genus(g))
                assert rank(g, D) == brute_force_rank(g, D)

    def test_oracle_on_known_values(self):
        g = banana(3)
        assert brute_force_rank(g, Divisor.on(g, {"v1": 1, "v2": 1})) == 1
        assert brute_force_rank(g, Divisor.point(g, "v1", 2)) == 0
        assert brute_force_rank(g, Divisor.point(g, "v1", -1)) == -1


class TestClasses:
    """Tests for class enumeration and divisorial gonality."""

    def test_one_class_per_jacobian_element(self):
        for g in (banana(3), trigonal_chain(), banana(2, 0, 1)):
            classes = enumerate_classes(g, 2)
            assert len(classes) == jacobian_order(g)
            assert all(c.degree == 2 for c in classes)
            reps = [c.representative for c in classes]
            model = weightless_model(g)
            for i, a in enumerate(reps):
                assert not any(is_equivalent(model, a, b) for b in reps[i + 1:])

    def test_enumeration_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_classes(trigonal_chain(), 2, Config(enumeration_cap=5))

    def test_w_r_d_of_theta(self):
        g = banana(3)
        classes = W_r_d(g, 2, 1)
        assert len(classes) == 1
        assert is_equivalent(g, classes[0].representative, Divisor.on(g, {"v1": 1, "v2": 1}))
        with pytest.raises(PreconditionError):
            W_r_d(g, -1, 1)

    def test_w_r_d_matches_full_enumeration(self, rng):
        checked = 0
        while checked < 40:
            g = random_graph(rng, max_vertices=4, max_edges=6, max_weight=1)
            if jacobian_order(g) > 500:
                continue
            checked += 1
            chips = engine(weightless_model(g))
            for d in range(4):
                for r in range(3):
                    expected = sorted(
                        c.representative.values
                        for c in enumerate_classes(g, d)
                        if chips.rank(c.representative.values) >= r
                    )
                    assert [c.representative.values for c in W_r_d(g, d, r)] == expected

    def test_divisorially_gonal(self):
        result = is_divisorially_gonal(banana(3), 2)
        assert result.decision
        assert result.witness.degree == 2
        assert not is_divisorially_gonal(banana(3), 1).decision

    def test_trigonal_chain_is_not_divisorially_trigonal(self):
        result = is_divisorially_gonal(trigonal_chain(), 3)
        assert result.decision is False
        assert result.witness is None

    def test_divisorial_trigonal_witness(self):
        g = divisorial_trigonal()
        result = is_divisorially_gonal(g, 3)
        assert result.decision
        assert rank(g, result.witness) >= 1
        target = Divisor.point(g, "v1", 3)
        assert is_equivalent(g, result.witness, target)
        assert is_equivalent(g, target, Divisor.point(g, "v4", 3))
        assert len(W_r_d(g, 3, 1)) == 1

    def test_divisorial_gonality(self):
        assert divisorial_gonality(banana(3)) == 2
        assert divisorial_gonality(path(3)) == 1
        assert divisorial_gonality(trigonal_chain(), max_degree=3) is None
