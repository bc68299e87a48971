"""Hyperellipticity of weighted graphs and of stable curves with a given dual graph."""

import logging
from dataclasses import dataclass

from ..config import Config
from ..divisors import Divisor, is_divisorially_gonal
from ..errors import CertificateDisagreement, PreconditionError
from ..gonality import is_geometrically_gonal
from ..graph import (
    WeightedGraph,
    bridges,
    contract_bridges,
    genus,
    is_2_edge_connected,
    is_stable,
    loopless_model,
    strip_legs,
)
from ..morphism import IndexedMorphism
from .involution import GraphInvolution, find_hyperelliptic_involution

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HyperellipticReport:
    """The decision with its certificates.

    ``involution`` and ``quotient`` live on the loopless model of ``g`` with
    legs dropped and bridges contracted; ``quotient`` needs three vertices.
    """

    decision: bool
    method: str
    involution: GraphInvolution | None = None
    witness: Divisor | None = None
    involutions: int = 0
    quotient: IndexedMorphism | None = None


def is_hyperelliptic(g: WeightedGraph, config: Config | None = None) -> HyperellipticReport:
    """Decide whether ``g`` carries a degree-2 divisor of rank 1.

    The divisorial test always runs. For genus at least 2 the involution
    test on the bridge-contracted loopless model runs as well, and the two
    answers must agree.

    Raises:
        CertificateDisagreement: If the two tests disagree.
    """
    if genus(g) <= 1:
        return HyperellipticReport(True, "genus")
    divisorial = is_divisorially_gonal(g, 2, config)
    reduced = contract_bridges(strip_legs(loopless_model(g)))
    search = find_hyperelliptic_involution(reduced)
    if (search.involution is not None) != divisorial.decision:
        raise CertificateDisagreement(
            f"involution search says {search.involution is not None}, "
            f"divisorial rank says {divisorial.decision}"
        )
    return HyperellipticReport(
        divisorial.decision,
        "involution+divisorial",
        search.involution,
        divisorial.witness,
        search.count,
        search.morphism,
    )


def two_vertex_classification(g: WeightedGraph) -> bool:
    """Closed form for two vertices: two edges, or more edges and no weights.

    Raises:
        PreconditionError: Unless ``g`` is loopless, 2-edge-connected, has
            two vertices and genus at least 2.
    """
    if len(g) != 2 or g.has_loops or not is_2_edge_connected(g) or genus(g) < 2:
        raise PreconditionError("two-vertex classification needs a loopless bridgeless two-vertex graph of genus >= 2")
    return len(g.edges) == 2 or g.total_weight == 0


@dataclass(frozen=True)
class BridgeReport:
    ok: bool
    violators: tuple[str, ...]
    counts: tuple[tuple[str, int], ...]


def bridge_condition(g: WeightedGraph) -> BridgeReport:
    """Every vertex meets at most ``2 w(v) + 2`` bridges."""
    counts = {v: 0 for v in g.vertices}
    for edge_id in bridges(g):
        for v in set(g.edge(edge_id).ends):
            counts[v] += 1
    violators = tuple(v for v in g.vertices if counts[v] > 2 * g.weights[v] + 2)
    return BridgeReport(not violators, violators, tuple(counts.items()))


@dataclass(frozen=True)
class LocusReport:
    """Whether a stable graph is the dual graph of a hyperelliptic stable curve.

    ``geometric`` is the degree-2 Hurwitz-type search; ``consistent`` records
    its agreement with the decision and is None for two-vertex graphs.
    """

    decision: bool
    hyperelliptic: bool
    bridges: BridgeReport
    geometric: bool | None
    consistent: bool | None


def stable_curve_hyperelliptic_locus(g: WeightedGraph, config: Config | None = None) -> LocusReport:
    """Hyperelliptic plus the bridge condition, cross-checked with geometric 2-gonality.

    Raises:
        PreconditionError: If ``g`` is not stable of genus at least 2.
    """
    if not is_stable(g) or genus(g) < 2:
        raise PreconditionError("the hyperelliptic locus needs a stable graph of genus >= 2")
    hyperelliptic = is_hyperelliptic(g, config).decision
    bridge_report = bridge_condition(g)
    decision = hyperelliptic and bridge_report.ok
    geometric = is_geometrically_gonal(g, 2, config=config).decision
    consistent = None if len(g) == 2 or geometric is None else geometric == decision
    if consistent is False:
        log.warning("bridge criterion and geometric 2-gonality disagree")
    return LocusReport(decision, hyperelliptic, bridge_report, geometric, consistent)
