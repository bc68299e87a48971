"""Weighted multigraphs, their models and structural transformations."""

from .core import (
    Edge,
    WeightedGraph,
    bridges,
    edge_valency,
    genus,
    is_2_edge_connected,
    is_semistable,
    is_stable,
    is_tree,
    require_valid,
    to_networkx,
    validate,
    valency,
)
from .corpus import random_graph, stable_graphs
from .fixtures import FIXTURES, banana, divisorial_trigonal, fixture, path, spider, theta, trigonal_chain
from .isomorphism import are_isomorphic, stable_equivalent
from .transforms import (
    contract_bridges,
    contract_edge,
    is_special_vertex,
    loopless_model,
    refine,
    relabel,
    remove_two_valent,
    smooth_vertex,
    stabilize,
    strip_legs,
    weightless_model,
)

__all__ = [
    "Edge",
    "FIXTURES",
    "WeightedGraph",
    "are_isomorphic",
    "banana",
    "bridges",
    "contract_bridges",
    "contract_edge",
    "divisorial_trigonal",
    "edge_valency",
    "fixture",
    "genus",
    "is_2_edge_connected",
    "is_semistable",
    "is_special_vertex",
    "is_stable",
    "is_tree",
    "loopless_model",
    "path",
    "random_graph",
    "refine",
    "relabel",
    "remove_two_valent",
    "require_valid",
    "smooth_vertex",
    "spider",
    "stabilize",
    "stable_equivalent",
    "stable_graphs",
    "strip_legs",
    "theta",
    "to_networkx",
    "trigonal_chain",
    "validate",
    "valency",
    "weightless_model",
]
