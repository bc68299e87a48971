"""Indexed morphisms, harmonicity and the homomorphization construction."""

from .fixtures import banana_double_cover, trigonal_chain_cover, vertical_edge_cover
from .generators import random_pseudo_harmonic, random_tree
from .harmonic import (
    HarmonicCertificate,
    HarmonicCheck,
    PseudoHarmonicFailure,
    certify,
    check_harmonic,
    check_pseudo_harmonic,
    local_sums,
    pullback,
    ramification_divisor,
    riemann_hurwitz_degrees,
    riemann_hurwitz_holds,
    vertex_partition_set,
)
from .homomorphize import homomorphize
from .indexed import CONTRACT, EdgeImage, IndexedMorphism, identity_morphism, is_simple, morphism_violations

__all__ = [
    "CONTRACT",
    "EdgeImage",
    "HarmonicCertificate",
    "HarmonicCheck",
    "IndexedMorphism",
    "PseudoHarmonicFailure",
    "banana_double_cover",
    "certify",
    "check_harmonic",
    "check_pseudo_harmonic",
    "homomorphize",
    "identity_morphism",
    "is_simple",
    "local_sums",
    "morphism_violations",
    "pullback",
    "ramification_divisor",
    "random_pseudo_harmonic",
    "random_tree",
    "riemann_hurwitz_degrees",
    "riemann_hurwitz_holds",
    "trigonal_chain_cover",
    "vertex_partition_set",
    "vertical_edge_cover",
]
