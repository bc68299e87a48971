"""Tests for indexed morphisms, harmonicity and homomorphization."""

import pytest

from graph_gonality.data import load_morphism, morphism_from_json, morphism_to_json
from graph_gonality.divisors import Divisor, is_equivalent
from graph_gonality.errors import MorphismError, PreconditionError
from graph_gonality.graph import WeightedGraph, banana, genus, is_tree, path
from graph_gonality.hurwitz import PartitionSet
from graph_gonality.morphism import (
    HarmonicCertificate,
    IndexedMorphism,
    PseudoHarmonicFailure,
    banana_double_cover,
    certify,
    check_harmonic,
    check_pseudo_harmonic,
    homomorphize,
    identity_morphism,
    is_simple,
    local_sums,
    morphism_violations,
    pullback,
    ramification_divisor,
    random_pseudo_harmonic,
    riemann_hurwitz_degrees,
    riemann_hurwitz_holds,
    trigonal_chain_cover,
    vertex_partition_set,
    vertical_edge_cover,
)


def unbalanced_path() -> IndexedMorphism:
    g = path(3)
    return IndexedMorphism.build(
        g,
        g,
        {v: v for v in g.vertices},
        {"e1": ("e1", 2), "e2": ("e2", 1)},
    )


class TestIndexedMorphism:
    """Tests for construction and structural checks."""

    def test_build(self):
        phi = banana_double_cover()
        assert phi("v1") == "u1"
        assert phi.fiber("u2") == ("v2",)
        assert phi.index("e2") == 1
        assert is_simple(phi)
        assert not is_simple(trigonal_chain_cover())

    def test_unknown_target_edge(self):
        with pytest.raises(MorphismError, match="unknown edge e9"):
            IndexedMorphism.build(
                banana(2),
                path(2),
                {"v1": "u1", "v2": "u2"},
                {"e1": ("e9", 1), "e2": ("e1", 1)},
            )

    def test_missing_images(self):
        phi = IndexedMorphism(banana(2), path(2), (("v1", "u1"),), ())
        problems = morphism_violations(phi)
        assert "vertex v2 has no image" in problems
        assert "edge e1 has no image" in problems

    def test_contracted_edge_across_fibers(self):
        with pytest.raises(MorphismError, match="joins different fibers"):
            IndexedMorphism.build(
                banana(2),
                path(2),
                {"v1": "u1", "v2": "u2"},
                {"e1": (None, 0), "e2": ("e1", 1)},
            )

    def test_loops_rejected(self):
        with pytest.raises(MorphismError):
            identity_morphism(WeightedGraph.from_edges(["v"], [("v", "v")]))

    def test_identity(self):
        phi = identity_morphism(banana(3))
        cert = certify(phi)
        assert cert.degree == 1
        assert ramification_divisor(phi) == Divisor.zero(banana(3))


class TestHarmonic:
    """Tests for local degrees, ramification and Riemann-Hurwitz."""

    def test_banana_double_cover(self):
        phi = banana_double_cover()
        cert = certify(phi)
        assert cert.degree == 2
        assert cert.m == {"v1": 2, "v2": 2}
        assert cert.ramification.values == (2, 2)
        assert check_harmonic(phi).harmonic
        assert riemann_hurwitz_degrees(phi) == (0, -4, 4)

    def test_vertical_edge_cover(self):
        phi = vertical_edge_cover()
        cert = certify(phi)
        assert cert.degree == 2
        assert cert.m == {"v1": 1, "v2": 1, "v3": 2}
        assert cert.ramification.values == (1, 1, 2)
        assert riemann_hurwitz_holds(phi)

    def test_trigonal_chain_cover(self):
        phi = trigonal_chain_cover()
        cert = certify(phi)
        assert cert.degree == 3
        assert local_sums(phi, "v2") == {"e1": 3, "e2": 3}
        assert cert.ramification.values == (4, 3, 3, 4)
        assert sorted(vertex_partition_set(phi, "v2").partitions) == [(1, 1, 1), (2, 1)]
        assert vertex_partition_set(phi, "v1") == PartitionSet.of(3, [[1, 1, 1]])
        total, pulled, ramified = riemann_hurwitz_degrees(phi)
        assert total == pulled + ramified == 8

    def test_unbalanced_sums_are_reported(self):
        result = check_pseudo_harmonic(unbalanced_path())
        assert isinstance(result, PseudoHarmonicFailure)
        assert result.vertex == "u2"
        assert result.target_edges == ("e1", "e2")
        assert result.sums == (2, 1)
        assert str(result) == "unbalanced index sums at u2 (e1=2, e2=1)"
        with pytest.raises(PreconditionError):
            certify(unbalanced_path())

    def test_weight_below_target_is_not_harmonic(self):
        source = banana(2)
        target = WeightedGraph.from_edges({"u1": 1, "u2": 0}, [("u1", "u2")])
        phi = IndexedMorphism.build(
            source, target, {"v1": "u1", "v2": "u2"}, {"e1": ("e1", 1), "e2": ("e1", 1)}
        )
        check = check_harmonic(phi)
        assert not check.harmonic
        assert dict(check.slack)["v1"] == -2

    def test_random_morphisms(self, rng):
        for _ in range(500):
            phi = random_pseudo_harmonic(rng)
            result = check_pseudo_harmonic(phi)
            assert isinstance(result, HarmonicCertificate)
            assert result.non_degenerate
            total, pulled, ramified = riemann_hurwitz_degrees(phi)
            assert total == pulled + ramified
            assert riemann_hurwitz_holds(phi)
            assert check_harmonic(phi).harmonic == ramification_divisor(phi).is_effective

    def test_pullback_preserves_equivalence(self, rng):
        for _ in range(100):
            phi = random_pseudo_harmonic(rng, simple=True)
            a, b = rng.sample(phi.target.vertices, 2)
            pa = pullback(phi, Divisor.point(phi.target, a))
            pb = pullback(phi, Divisor.point(phi.target, b))
            assert pa.degree == pb.degree == certify(phi).degree
            assert is_equivalent(phi.source, pa, pb)


class TestHomomorphize:
    """Tests for removing contracted edges."""

    def test_vertical_edge_cover(self):
        phi = homomorphize(vertical_edge_cover())
        assert not any(image.contracted for _, image in phi.edge_images)
        assert certify(phi).degree == 2
        assert genus(phi.source) == 1
        assert phi("vhat:c") == "lhat:c"
        assert is_tree(phi.target)

    def test_needs_tree_target(self):
        phi = identity_morphism(banana(2))
        with pytest.raises(PreconditionError):
            homomorphize(phi)

    def test_random_morphisms(self, rng):
        for _ in range(100):
            phi = random_pseudo_harmonic(rng)
            hom = homomorphize(phi)
            assert not any(image.contracted for _, image in hom.edge_images)
            assert certify(hom).degree == certify(phi).degree
            assert genus(hom.source) == genus(phi.source)
            assert is_tree(hom.target)

    def test_commutes_with_collapsing_new_leaves(self, rng):
        for _ in range(200):
            phi = random_pseudo_harmonic(rng)
            hom = homomorphize(phi)
            collapse = {u: u for u in phi.target.vertices}
            for e in phi.source.edges:
                if phi.edge_map[e.id].contracted:
                    collapse[f"lhat:{e.id}"] = phi(e.ends[0])
            assert set(hom.target.vertices) == set(collapse)
            old_m, new_m = certify(phi).m, certify(hom).m
            for v in phi.source.vertices:
                assert hom(v) == phi(v)
                assert new_m[v] == old_m[v]
            for e in hom.source.edges:
                image = hom.edge_map[e.id]
                if e.id in phi.source.edge_map:
                    assert (image.target, image.index) == (phi.edge_map[e.id].target, phi.edge_map[e.id].index)
                    continue
                assert image.target.endswith(":lhat")
                assert image.index == 1
                a, b = (collapse[hom(v)] for v in e.ends)
                assert a == b
                original = [v for v in e.ends if v in phi.source.weights]
                assert [phi(v) for v in original] == [a] * len(original)


class TestMorphismJson:
    """Tests for the morphism file format."""

    def test_load_cover(self, fixtures_dir):
        phi = load_morphism(fixtures_dir / "cover.json")
        cert = certify(phi)
        assert cert.degree == 3
        assert cert.ramification.values == (4, 4)
        assert riemann_hurwitz_holds(phi)

    def test_to_json_and_back(self):
        phi = vertical_edge_cover()
        assert morphism_from_json(morphism_to_json(phi)) == phi
