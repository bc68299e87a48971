"""Hurwitz partition sets and the symmetric-group realizability solver."""

from .partitions import (
    Partition,
    PartitionSet,
    RHGenus,
    add_trivial,
    canonical_permutation,
    complete_with_simple,
    cycle_type,
    ramification,
    rh_genus,
    riemann_hurwitz_total,
    simple_deficit,
    simple_partition,
    trivial_partition,
)
from .solver import HurwitzResult, HurwitzWitness, is_hurwitz_type, is_hurwitz_vertex

__all__ = [
    "HurwitzResult",
    "HurwitzWitness",
    "Partition",
    "PartitionSet",
    "RHGenus",
    "add_trivial",
    "canonical_permutation",
    "complete_with_simple",
    "cycle_type",
    "is_hurwitz_type",
    "is_hurwitz_vertex",
    "ramification",
    "rh_genus",
    "riemann_hurwitz_total",
    "simple_deficit",
    "simple_partition",
    "trivial_partition",
]
