"""JSON input and output for the package's data types."""

from .loader import (
    divisor_from_json,
    divisor_to_json,
    graph_from_json,
    graph_to_json,
    load_divisor,
    load_graph,
    load_json,
    load_morphism,
    load_partition_set,
    morphism_from_json,
    morphism_to_json,
    partition_set_from_json,
)

__all__ = [
    "divisor_from_json",
    "divisor_to_json",
    "graph_from_json",
    "graph_to_json",
    "load_divisor",
    "load_graph",
    "load_json",
    "load_morphism",
    "load_partition_set",
    "morphism_from_json",
    "morphism_to_json",
    "partition_set_from_json",
]
