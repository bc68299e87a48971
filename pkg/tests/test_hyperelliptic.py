"""Tests for hyperelliptic involutions, the two-vertex rule and the bridge criterion."""

import pytest

from graph_gonality.divisors import W_r_d, rank
from graph_gonality.errors import PreconditionError
from graph_gonality.graph import (
    WeightedGraph,
    banana,
    contract_bridges,
    genus,
    is_2_edge_connected,
    loopless_model,
    path,
    random_graph,
    refine,
    spider,
    stable_graphs,
    weightless_model,
)
from graph_gonality.hyperelliptic import (
    GraphInvolution,
    bridge_condition,
    find_hyperelliptic_involution,
    involution_violations,
    is_hyperelliptic,
    quotient,
    stable_curve_hyperelliptic_locus,
    two_vertex_classification,
)
from graph_gonality.morphism import certify, check_harmonic


def double_chain() -> WeightedGraph:
    """Three vertices in a row, consecutive ones joined by two edges."""
    return WeightedGraph.from_edges(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v2"), ("v2", "v3"), ("v2", "v3")],
    )


class TestInvolutions:
    """Tests for the involution search."""

    def test_theta_swaps_its_vertices(self):
        search = find_hyperelliptic_involution(banana(3))
        assert search.count == 1
        iota = search.involution
        assert iota.vertex_map == {"v1": "v2", "v2": "v1"}
        assert iota.inverted == ("e1", "e2", "e3")
        assert search.morphism is None

    def test_weighted_vertex_stays_fixed(self):
        search = find_hyperelliptic_involution(banana(2, 0, 1))
        iota = search.involution
        assert iota.fixed_vertices == ("v1", "v2")
        assert iota.edge_map == {"e1": "e2", "e2": "e1"}

    def test_weighted_theta_has_none(self):
        search = find_hyperelliptic_involution(banana(3, 0, 1))
        assert search.involution is None
        assert search.count == 0

    def test_quotient_morphism(self):
        search = find_hyperelliptic_involution(double_chain())
        assert search.count == 1
        phi = search.morphism
        assert certify(phi).degree == 2
        assert check_harmonic(phi).harmonic
        assert len(phi.target) == 3

    def test_involutions_match_degree_two_classes(self):
        checked = 0
        for gen in (2, 3):
            for size in range(1, 6):
                for g in stable_graphs(gen, size, loopless=True):
                    if not is_2_edge_connected(g):
                        continue
                    checked += 1
                    search = find_hyperelliptic_involution(g)
                    assert (search.involution is not None) == bool(W_r_d(g, 2, 1))
                    if search.involution is not None and len(g) >= 3:
                        assert certify(search.morphism).degree == 2
                        assert check_harmonic(search.morphism).harmonic
        assert checked > 0

    def test_needs_bridgeless_graph(self):
        with pytest.raises(PreconditionError):
            find_hyperelliptic_involution(spider())
        with pytest.raises(PreconditionError):
            find_hyperelliptic_involution(banana(2))

    def test_violations(self):
        g = banana(3)
        iota = GraphInvolution(
            (("v1", "v2"), ("v2", "v2")),
            tuple((e.id, e.id) for e in g.edges),
        )
        assert "vertex map has order > 2 at v1" in involution_violations(g, iota)
        with pytest.raises(PreconditionError):
            quotient(g, iota)


class TestHyperelliptic:
    """Tests for the combined decision."""

    def test_low_genus(self):
        report = is_hyperelliptic(path(3))
        assert report.decision
        assert report.method == "genus"

    def test_theta(self):
        g = banana(3)
        report = is_hyperelliptic(g)
        assert report.decision
        assert report.method == "involution+divisorial"
        assert report.involutions == 1
        assert report.witness.degree == 2
        assert rank(g, report.witness) == 1

    def test_weighted_theta(self):
        report = is_hyperelliptic(banana(3, 0, 1))
        assert not report.decision
        assert report.involution is None
        assert report.witness is None

    def test_bridges_are_contracted(self):
        assert is_hyperelliptic(spider()).decision
        assert is_hyperelliptic(spider(leaf_loops=True)).decision

    def test_quotient_attached(self):
        report = is_hyperelliptic(double_chain())
        assert report.decision
        assert certify(report.quotient).degree == 2

    def test_two_vertex_classification(self):
        assert two_vertex_classification(banana(3))
        assert two_vertex_classification(banana(2, 0, 1))
        assert not two_vertex_classification(banana(3, 0, 1))
        with pytest.raises(PreconditionError):
            two_vertex_classification(banana(2))
        with pytest.raises(PreconditionError):
            two_vertex_classification(double_chain())

    def test_two_vertex_rule_matches_search(self):
        for n in range(2, 6):
            for w1 in range(3):
                for w2 in range(3):
                    g = banana(n, w1, w2)
                    if genus(g) < 2:
                        continue
                    assert two_vertex_classification(g) == is_hyperelliptic(g).decision

    def test_certificates_agree_on_stable_graphs(self):
        for gen in (2, 3):
            for g in stable_graphs(gen, 2, loopless=True):
                if not is_2_edge_connected(g):
                    continue
                report = is_hyperelliptic(g)
                assert report.decision == two_vertex_classification(g)


class TestStableCurves:
    """Tests for the bridge criterion and the hyperelliptic locus."""

    def test_bridge_condition(self):
        report = bridge_condition(spider(leaf_loops=True))
        assert not report.ok
        assert report.violators == ("c",)
        assert dict(report.counts) == {"c": 3, "l1": 1, "l2": 1, "l3": 1}
        assert bridge_condition(banana(3)).ok

    def test_stable_spider(self):
        report = stable_curve_hyperelliptic_locus(spider(leaf_loops=True))
        assert report.hyperelliptic
        assert not report.bridges.ok
        assert report.decision is False

    def test_needs_stable_graph(self):
        with pytest.raises(PreconditionError):
            stable_curve_hyperelliptic_locus(spider())

    def test_two_vertices_are_not_cross_checked(self):
        report = stable_curve_hyperelliptic_locus(banana(3))
        assert report.decision
        assert report.consistent is None

    def test_locus_matches_geometric_two_gonality(self):
        for gen in (2, 3, 4):
            for size in (1, 3, 4, 5):
                for g in stable_graphs(gen, size):
                    report = stable_curve_hyperelliptic_locus(g)
                    assert report.geometric == report.decision
                    assert report.consistent is True

    def test_single_vertex_graphs_agree(self):
        for gen, count in ((2, 2), (3, 4)):
            graphs = list(stable_graphs(gen, 1))
            assert len(graphs) == count
            for g in graphs:
                report = stable_curve_hyperelliptic_locus(g)
                assert report.decision
                assert report.geometric
                assert report.consistent


class TestReductions:
    """Hyperellipticity under the reductions to loopless, weightless and bridgeless models."""

    def test_models_and_bridges(self, rng):
        for _ in range(1000):
            g = random_graph(rng)
            decision = is_hyperelliptic(g).decision
            assert is_hyperelliptic(loopless_model(g)).decision == decision
            assert is_hyperelliptic(weightless_model(g)).decision == decision
            h = loopless_model(g)
            assert is_hyperelliptic(contract_bridges(h)).decision == decision

    def test_subdivision_only_loses_hyperellipticity(self, rng):
        for _ in range(1000):
            g = loopless_model(random_graph(rng))
            if not g.edges:
                continue
            edge = rng.choice(g.edges).id
            refined = refine(g, {edge: rng.randint(2, 3)})
            if is_hyperelliptic(refined).decision:
                assert is_hyperelliptic(g).decision
