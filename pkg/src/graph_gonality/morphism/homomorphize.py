"""Replace contracted edges by new leaves so that no edge maps to a point."""

from ..errors import PreconditionError
from ..graph import WeightedGraph, is_tree
from .harmonic import certify
from .indexed import IndexedMorphism


def homomorphize(phi: IndexedMorphism) -> IndexedMorphism:
    """Turn a pseudo-harmonic morphism to a tree into one without contracted edges.

    For a contracted edge ``e`` from ``v1`` to ``v2`` over ``u`` with fiber
    ``v1, v2, ..., vn``, the edge is subdivided by ``vhat:e`` and the target
    gains a leaf ``lhat:e`` at ``u``. The source gains ``m(v1) - 1`` leaves at
    ``v1``, ``m(v2) - 1`` at ``v2`` and ``m(vi)`` at every other fiber
    vertex. All new edges have index 1 and the degree is unchanged.

    Raises:
        PreconditionError: If the target is not a tree.
    """
    if not is_tree(phi.target):
        raise PreconditionError("homomorphize needs a tree target")
    m = certify(phi).m
    source_weights = dict(phi.source.weights)
    source_edges = {e.id: e.ends for e in phi.source.edges}
    target_weights = dict(phi.target.weights)
    target_edges = {e.id: e.ends for e in phi.target.edges}
    vertex_map = dict(phi.vertex_map)
    images = {edge_id: (image.target, image.index) for edge_id, image in phi.edge_images}

    for e in phi.source.edges:
        if not phi.edge_map[e.id].contracted:
            continue
        v1, v2 = e.ends
        u = phi(v1)
        hat, tip, stem = f"vhat:{e.id}", f"lhat:{e.id}", f"{e.id}:lhat"
        target_weights[tip] = 0
        target_edges[stem] = (u, tip)
        source_weights[hat] = 0
        vertex_map[hat] = tip
        del source_edges[e.id], images[e.id]
        for half, end in ((f"{e.id}:1", v1), (f"{e.id}:2", v2)):
            source_edges[half] = (end, hat)
            images[half] = (stem, 1)
        counts = {v1: m[v1] - 1, v2: m[v2] - 1}
        counts |= {v: m[v] for v in phi.fiber(u) if v not in (v1, v2)}
        for v, count in counts.items():
            for i in range(1, count + 1):
                leaf = f"leaf:{e.id}:{v}:{i}"
                source_weights[leaf] = 0
                source_edges[leaf] = (v, leaf)
                vertex_map[leaf] = tip
                images[leaf] = (stem, 1)

    return IndexedMorphism.build(
        WeightedGraph.from_edges(source_weights, source_edges),
        WeightedGraph.from_edges(target_weights, target_edges),
        vertex_map,
        images,
    )
