"""Structural transformations of weighted graphs.

Every transformation is pure and generates fresh identifiers with a
deterministic prefix scheme, so outputs are reproducible:

* ``mid:<edge>`` is the vertex splitting a loop, its edges are
  ``<edge>:a`` and ``<edge>:b``;
* ``w:<vertex>:<i>`` is the vertex on the ``i``-th loop added for weight;
* ``sub:<edge>:<i>`` are the vertices inserted by :func:`refine`, the
  new edges are ``<edge>:<i>``.
"""

import logging
from collections.abc import Mapping

import networkx as nx

from ..errors import PreconditionError, UnknownVertexError
from .core import WeightedGraph, bridges, edge_valency, genus, valency

log = logging.getLogger(__name__)


def _rebuild(
    weights: dict[str, int],
    edges: dict[str, tuple[str, str]],
    legs: Mapping[str, str],
) -> WeightedGraph:
    return WeightedGraph.from_edges(weights, edges, legs)


def _parts(g: WeightedGraph) -> tuple[dict[str, int], dict[str, tuple[str, str]], dict[str, str]]:
    return dict(g.weights), {e.id: e.ends for e in g.edges}, dict(g.leg_vertex)


def loopless_model(g: WeightedGraph) -> WeightedGraph:
    """Insert a weight-zero vertex in the interior of every loop."""
    if not g.has_loops:
        return g
    weights, _, legs = _parts(g)
    edges: dict[str, tuple[str, str]] = {}
    for e in g.edges:
        if e.is_loop:
            v, mid = e.ends[0], f"mid:{e.id}"
            weights[mid] = 0
            edges[f"{e.id}:a"] = (v, mid)
            edges[f"{e.id}:b"] = (mid, v)
        else:
            edges[e.id] = e.ends
    return _rebuild(weights, edges, legs)


def weightless_model(g: WeightedGraph) -> WeightedGraph:
    """Trade each unit of weight for a subdivided loop; the result is loopless."""
    base = loopless_model(g)
    if base.total_weight == 0:
        return base
    weights, edges, legs = _parts(base)
    for v, w in base.vertex_weights:
        weights[v] = 0
        for i in range(1, w + 1):
            tip = f"w:{v}:{i}"
            weights[tip] = 0
            edges[f"{tip}:a"] = (v, tip)
            edges[f"{tip}:b"] = (tip, v)
    return _rebuild(weights, edges, legs)


def refine(g: WeightedGraph, plan: Mapping[str, int]) -> WeightedGraph:
    """Replace each edge ``e`` by a path of ``plan[e]`` edges.

    Edges missing from the plan are kept as they are.

    Raises:
        PreconditionError: If a plan value is smaller than 1.
        UnknownVertexError: If the plan names an unknown edge.
    """
    for edge_id, count in plan.items():
        g.edge(edge_id)
        if count < 1:
            raise PreconditionError(f"refinement plan for {edge_id!r} must be positive, got {count}")
    if all(count == 1 for count in plan.values()):
        return g
    weights, _, legs = _parts(g)
    edges: dict[str, tuple[str, str]] = {}
    for e in g.edges:
        count = plan.get(e.id, 1)
        if count == 1:
            edges[e.id] = e.ends
            continue
        path = [e.ends[0]] + [f"sub:{e.id}:{i}" for i in range(1, count)] + [e.ends[1]]
        for inner in path[1:-1]:
            weights[inner] = 0
        for i in range(1, count + 1):
            edges[f"{e.id}:{i}"] = (path[i - 1], path[i])
    return _rebuild(weights, edges, legs)


def _removable_leaf(g: WeightedGraph, v: str) -> bool:
    return g.weights[v] == 0 and valency(g, v) == 1


def _smoothable(g: WeightedGraph, v: str) -> bool:
    if g.weights[v] != 0 or g.legs_at(v) or edge_valency(g, v) != 2:
        return False
    # a lone vertex with one loop cannot be smoothed
    return not any(e.is_loop for e in g.incidence[v])


def smooth_vertex(g: WeightedGraph, v: str) -> WeightedGraph:
    """Remove a 2-valent weight-zero vertex, merging its two edges.

    The merged edge keeps the identifier of the first incident edge.

    Raises:
        PreconditionError: If ``v`` is not 2-valent of weight zero without legs.
    """
    g.weight(v)
    if not _smoothable(g, v):
        raise PreconditionError(f"vertex {v!r} is not a 2-valent weight-zero vertex")
    first, second = g.incidence[v]
    weights, edges, legs = _parts(g)
    del weights[v]
    del edges[second.id]
    edges[first.id] = (first.other_end(v), second.other_end(v))
    return _rebuild(weights, edges, legs)


def is_special_vertex(g: WeightedGraph, v: str) -> bool:
    """True when ``v`` is 2-valent, weightless and both its edges go to one vertex."""
    if not _smoothable(g, v):
        return False
    first, second = g.incidence[v]
    return first.other_end(v) == second.other_end(v)


def remove_two_valent(g: WeightedGraph, keep_special: bool = True) -> WeightedGraph:
    """Smooth 2-valent weight-zero vertices until none is left.

    Args:
        g: Input graph.
        keep_special: Leave vertices whose removal would create a loop.
    """
    current = g
    while True:
        candidates = [
            v
            for v in current.vertices
            if len(current) > 1
            and _smoothable(current, v)
            and not (keep_special and is_special_vertex(current, v))
        ]
        if not candidates:
            return current
        current = smooth_vertex(current, candidates[0])


def _delete_leaf(g: WeightedGraph, v: str) -> WeightedGraph:
    (edge,) = g.incidence[v]
    weights, edges, legs = _parts(g)
    del weights[v]
    del edges[edge.id]
    return _rebuild(weights, edges, legs)


def stabilize(g: WeightedGraph) -> WeightedGraph:
    """Remove weight-zero leaves and 2-valent weight-zero vertices to a fixpoint.

    Vertices carrying legs are never removed.

    Raises:
        PreconditionError: If the genus is smaller than 2.
    """
    if genus(g) < 2:
        raise PreconditionError(f"stabilize needs genus >= 2, got {genus(g)}")
    current = g
    while True:
        leaf = next((v for v in current.vertices if _removable_leaf(current, v)), None)
        if leaf is not None:
            current = _delete_leaf(current, leaf)
            continue
        smooth = next((v for v in current.vertices if _smoothable(current, v)), None)
        if smooth is None:
            return current
        current = smooth_vertex(current, smooth)


def contract_edge(g: WeightedGraph, edge_id: str) -> WeightedGraph:
    """Contract one non-loop edge; the merged vertex keeps the first endpoint's id.

    Raises:
        PreconditionError: If the edge is a loop.
    """
    edge = g.edge(edge_id)
    if edge.is_loop:
        raise PreconditionError(f"cannot contract loop {edge_id!r}")
    keep, drop = sorted(edge.ends, key=g.vertices.index)
    weights, edges, legs = _parts(g)
    weights[keep] += weights.pop(drop)
    del edges[edge_id]
    edges = {k: tuple(keep if x == drop else x for x in ends) for k, ends in edges.items()}
    legs = {k: keep if x == drop else x for k, x in legs.items()}
    return _rebuild(weights, edges, legs)


def contract_bridges(g: WeightedGraph) -> WeightedGraph:
    """Contract every bridge, adding the weights of merged vertices.

    Each merged vertex keeps the identifier of its first vertex in canonical
    order.

    Raises:
        PreconditionError: If ``g`` has loops.
    """
    if g.has_loops:
        raise PreconditionError("contract_bridges needs a loopless graph")
    cut = set(bridges(g))
    if not cut:
        return g
    forest = nx.Graph()
    forest.add_nodes_from(g.vertices)
    forest.add_edges_from(g.edge(e).ends for e in cut)
    order = {v: i for i, v in enumerate(g.vertices)}
    leader: dict[str, str] = {}
    for component in nx.connected_components(forest):
        head = min(component, key=order.__getitem__)
        leader.update((v, head) for v in component)
    weights: dict[str, int] = {}
    for v, w in g.vertex_weights:
        weights[leader[v]] = weights.get(leader[v], 0) + w
    edges = {
        e.id: (leader[e.ends[0]], leader[e.ends[1]]) for e in g.edges if e.id not in cut
    }
    legs = {k: leader[v] for k, v in g.legs}
    log.debug("contracted %d bridges, %d -> %d vertices", len(cut), len(g), len(weights))
    return _rebuild(weights, edges, legs)


def strip_legs(g: WeightedGraph) -> WeightedGraph:
    """Return ``g`` without legs."""
    if not g.legs:
        return g
    return WeightedGraph(g.vertex_weights, g.half_edges, g.involution, ())


def relabel(g: WeightedGraph, order: list[str]) -> WeightedGraph:
    """Return ``g`` with its canonical vertex order replaced by ``order``."""
    if sorted(order) != sorted(g.vertices):
        raise UnknownVertexError("relabel order must list every vertex once")
    weights = {v: g.weights[v] for v in order}
    return WeightedGraph(tuple(weights.items()), g.half_edges, g.involution, g.legs)
