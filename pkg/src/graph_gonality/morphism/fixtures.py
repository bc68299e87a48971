"""Named morphisms used by the tests and the CLI corpus."""

from ..graph import WeightedGraph, banana, path, trigonal_chain
from .indexed import IndexedMorphism


def banana_double_cover() -> IndexedMorphism:
    """Both edges of a two-edge banana onto a single edge, index 1 each."""
    target = path(2)
    return IndexedMorphism.build(
        banana(2),
        target,
        {"v1": "u1", "v2": "u2"},
        {"e1": ("e1", 1), "e2": ("e1", 1)},
    )


def trigonal_chain_cover() -> IndexedMorphism:
    """Degree-3 morphism of the trigonal chain onto a path of four vertices.

    One of the two middle edges has index 2.
    """
    source = trigonal_chain()
    target = path(4)
    edges = {}
    for e in source.edges:
        a, b = sorted(e.ends)
        step = {"v1": "e1", "v2": "e2", "v3": "e3"}[a]
        edges[e.id] = (step, 1)
    edges["e4"] = ("e2", 2)
    return IndexedMorphism.build(
        source,
        target,
        {f"v{i}": f"u{i}" for i in range(1, 5)},
        edges,
    )


def vertical_edge_cover() -> IndexedMorphism:
    """Triangle onto an edge, contracting the side ``v1 v2``."""
    source = WeightedGraph.from_edges(
        ["v1", "v2", "v3"],
        {"a": ("v1", "v3"), "b": ("v2", "v3"), "c": ("v1", "v2")},
    )
    return IndexedMorphism.build(
        source,
        path(2),
        {"v1": "u1", "v2": "u1", "v3": "u2"},
        {"a": ("e1", 1), "b": ("e1", 1), "c": (None, 0)},
    )
