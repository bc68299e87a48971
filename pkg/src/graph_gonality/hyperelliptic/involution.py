"""Involutions with tree quotient on loopless 2-edge-connected graphs."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from ..errors import PreconditionError
from ..graph import WeightedGraph, edge_valency, genus, is_2_edge_connected, is_tree
from ..morphism import IndexedMorphism

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphInvolution:
    """Vertex and edge permutations of order at most 2.

    ``inverted`` lists the fixed edges whose endpoints are swapped.
    """

    vertex_images: tuple[tuple[str, str], ...]
    edge_images: tuple[tuple[str, str], ...]
    inverted: tuple[str, ...] = ()

    @cached_property
    def vertex_map(self) -> dict[str, str]:
        return dict(self.vertex_images)

    @cached_property
    def edge_map(self) -> dict[str, str]:
        return dict(self.edge_images)

    @property
    def fixed_vertices(self) -> tuple[str, ...]:
        return tuple(v for v, u in self.vertex_images if v == u)


def involution_violations(g: WeightedGraph, iota: GraphInvolution) -> list[str]:
    problems = []
    sigma, tau = iota.vertex_map, iota.edge_map
    if set(sigma) != set(g.vertices) or set(tau) != set(g.edge_map):
        return ["involution must act on every vertex and edge"]
    for v, u in sigma.items():
        if sigma.get(u) != v:
            problems.append(f"vertex map has order > 2 at {v}")
    for e in g.edges:
        image = g.edge_map.get(tau[e.id])
        if image is None or tau[image.id] != e.id:
            problems.append(f"edge map has order > 2 at {e.id}")
            continue
        moved = {sigma[x] for x in e.ends}
        if moved != set(image.ends):
            problems.append(f"edge {e.id} is not mapped compatibly with its endpoints")
        swapped = image.id == e.id and sigma[e.ends[0]] == e.ends[1] and not e.is_loop
        if swapped != (e.id in iota.inverted):
            problems.append(f"inversion flag of {e.id} is wrong")
    return problems


def _orbit_name(iota: GraphInvolution, g: WeightedGraph, v: str) -> str:
    u = iota.vertex_map[v]
    if u == v:
        return v
    first, second = sorted((v, u), key=g.vertices.index)
    return f"{first}|{second}"


def quotient(g: WeightedGraph, iota: GraphInvolution) -> WeightedGraph:
    """Vertex orbits joined by the non-inverted edge orbits; weights are zero.

    Raises:
        PreconditionError: If ``iota`` is not an involution of ``g``.
    """
    problems = involution_violations(g, iota)
    if problems:
        raise PreconditionError("; ".join(problems))
    names: dict[str, None] = {}
    for v in g.vertices:
        names[_orbit_name(iota, g, v)] = None
    edges: dict[str, tuple[str, str]] = {}
    seen: set[str] = set()
    for e in g.edges:
        if e.id in seen or e.id in iota.inverted:
            continue
        seen.update((e.id, iota.edge_map[e.id]))
        edges[e.id] = (_orbit_name(iota, g, e.ends[0]), _orbit_name(iota, g, e.ends[1]))
    return WeightedGraph.from_edges(list(names), edges)


def _vertex_involutions(g: WeightedGraph) -> Iterator[dict[str, str]]:
    """Order-2 vertex permutations fixing positive weights and preserving multiplicities."""
    vertices = g.vertices
    sigma: dict[str, str] = {}

    def consistent(x: str) -> bool:
        return all(g.multiplicity(x, y) == g.multiplicity(sigma[x], sigma[y]) for y in sigma)

    def extend(i: int) -> Iterator[dict[str, str]]:
        if i == len(vertices):
            yield dict(sigma)
            return
        v = vertices[i]
        if v in sigma:
            yield from extend(i + 1)
            return
        sigma[v] = v
        if consistent(v):
            yield from extend(i + 1)
        del sigma[v]
        if g.weights[v]:
            return
        for u in vertices[i + 1:]:
            if u in sigma or g.weights[u] or edge_valency(g, u) != edge_valency(g, v):
                continue
            sigma[v], sigma[u] = u, v
            if consistent(v) and consistent(u):
                yield from extend(i + 1)
            del sigma[v], sigma[u]

    yield from extend(0)


def _extend_to_edges(g: WeightedGraph, sigma: dict[str, str]) -> GraphInvolution | None:
    """The edge action forced by a tree quotient, or None when none exists."""
    groups: dict[frozenset[str], list[str]] = {}
    for e in g.edges:
        groups.setdefault(frozenset(e.ends), []).append(e.id)
    tau: dict[str, str] = {}
    inverted: list[str] = []
    for pair, edge_ids in groups.items():
        a, b = sorted(pair, key=g.vertices.index)
        image = frozenset((sigma[a], sigma[b]))
        if image == pair:
            if sigma[a] == a:
                if len(edge_ids) == 1:
                    tau[edge_ids[0]] = edge_ids[0]
                elif len(edge_ids) == 2:
                    tau[edge_ids[0]], tau[edge_ids[1]] = edge_ids[1], edge_ids[0]
                else:
                    return None
            else:
                for e in edge_ids:
                    tau[e] = e
                    inverted.append(e)
        else:
            others = groups.get(image, [])
            if len(edge_ids) != 1 or len(others) != 1:
                return None
            tau[edge_ids[0]] = others[0]
    order = {e.id: i for i, e in enumerate(g.edges)}
    return GraphInvolution(
        tuple((v, sigma[v]) for v in g.vertices),
        tuple(sorted(tau.items(), key=lambda item: order[item[0]])),
        tuple(sorted(inverted, key=order.__getitem__)),
    )


@dataclass(frozen=True)
class InvolutionSearch:
    """The first involution with tree quotient and how many exist."""

    involution: GraphInvolution | None
    count: int
    morphism: IndexedMorphism | None = None


def find_hyperelliptic_involution(g: WeightedGraph) -> InvolutionSearch:
    """Exhaustive search for an involution fixing positive-weight vertices with tree quotient.

    The search continues after the first hit so that ``count`` reports
    every such involution. For graphs with at least three vertices the
    degree-2 quotient morphism is attached.

    Raises:
        PreconditionError: If ``g`` has loops, bridges or genus below 2.
    """
    if g.has_loops or not is_2_edge_connected(g) or genus(g) < 2:
        raise PreconditionError("involution search needs a loopless 2-edge-connected graph of genus >= 2")
    found: list[GraphInvolution] = []
    for sigma in _vertex_involutions(g):
        iota = _extend_to_edges(g, sigma)
        if iota is not None and is_tree(quotient(g, iota)):
            found.append(iota)
    log.debug("%d hyperelliptic involutions on %d vertices", len(found), len(g))
    if not found:
        return InvolutionSearch(None, 0)
    first = found[0]
    morphism = quotient_morphism(g, first) if len(g) >= 3 else None
    return InvolutionSearch(first, len(found), morphism)


def quotient_morphism(g: WeightedGraph, iota: GraphInvolution) -> IndexedMorphism:
    """The degree-2 morphism onto the quotient.

    Fixed vertices have local degree 2 and swapped ones 1; straight fixed
    edges get index 2, swapped edges index 1 and inverted edges are
    contracted.
    """
    target = quotient(g, iota)
    vertex_map = {v: _orbit_name(iota, g, v) for v in g.vertices}
    orbit_edge = {}
    for e in target.edges:
        orbit_edge[e.id] = e.id
        orbit_edge[iota.edge_map[e.id]] = e.id
    images: dict[str, tuple[str | None, int]] = {}
    for e in g.edges:
        if e.id in iota.inverted:
            images[e.id] = (None, 0)
        elif iota.edge_map[e.id] == e.id:
            images[e.id] = (orbit_edge[e.id], 2)
        else:
            images[e.id] = (orbit_edge[e.id], 1)
    prescribed = None
    if not target.edges:
        prescribed = {v: 2 if iota.vertex_map[v] == v else 1 for v in g.vertices}
    return IndexedMorphism.build(g, target, vertex_map, images, prescribed)
