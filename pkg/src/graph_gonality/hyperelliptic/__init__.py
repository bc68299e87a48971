"""Hyperelliptic graphs: involutions, quotients and the bridge criterion."""

from .criteria import (
    BridgeReport,
    HyperellipticReport,
    LocusReport,
    bridge_condition,
    is_hyperelliptic,
    stable_curve_hyperelliptic_locus,
    two_vertex_classification,
)
from .involution import (
    GraphInvolution,
    InvolutionSearch,
    find_hyperelliptic_involution,
    involution_violations,
    quotient,
    quotient_morphism,
)

__all__ = [
    "BridgeReport",
    "GraphInvolution",
    "HyperellipticReport",
    "InvolutionSearch",
    "LocusReport",
    "bridge_condition",
    "find_hyperelliptic_involution",
    "involution_violations",
    "is_hyperelliptic",
    "quotient",
    "quotient_morphism",
    "stable_curve_hyperelliptic_locus",
    "two_vertex_classification",
]
