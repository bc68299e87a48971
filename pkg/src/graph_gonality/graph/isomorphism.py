"""Weight- and leg-respecting multigraph isomorphism."""

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match

from .core import WeightedGraph, to_networkx
from .transforms import stabilize

_node_match = categorical_node_match(["weight", "legs"], [0, 0])


def invariant_key(g: WeightedGraph) -> tuple:
    """A cheap isomorphism invariant used to bucket candidates."""
    profile = sorted(
        (g.weights[v], g.legs_at(v), sorted(g.multiplicity(v, u) for u in g.vertices))
        for v in g.vertices
    )
    return (len(g.vertices), len(g.edges), len(g.legs), tuple(map(repr, profile)))


def are_isomorphic(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """True iff a bijection preserving incidence, weights and leg counts exists."""
    if invariant_key(g1) != invariant_key(g2):
        return False
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2), node_match=_node_match)


def stable_equivalent(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """True iff both graphs have isomorphic stabilizations."""
    return are_isomorphic(stabilize(g1), stabilize(g2))
