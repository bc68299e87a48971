"""Divisors, linear equivalence and rank on weighted graphs."""

from .chipfiring import ChipFiringGraph
from .divisor import Divisor, PicardClass, canonical_divisor, transport
from .jacobian import brute_force_rank, jacobian_order, laplacian, smith_invariants
from .rank import (
    DivisorialResult,
    W_r_d,
    divisorial_gonality,
    enumerate_classes,
    is_divisorially_gonal,
    is_equivalent,
    picard_class,
    rank,
    reduce,
)

__all__ = [
    "ChipFiringGraph",
    "Divisor",
    "DivisorialResult",
    "PicardClass",
    "W_r_d",
    "brute_force_rank",
    "canonical_divisor",
    "divisorial_gonality",
    "enumerate_classes",
    "is_divisorially_gonal",
    "is_equivalent",
    "jacobian_order",
    "laplacian",
    "picard_class",
    "rank",
    "reduce",
    "smith_invariants",
    "transport",
]
