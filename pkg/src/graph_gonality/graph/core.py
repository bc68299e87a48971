"""Weighted multigraphs with half-edge structure."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..errors import InvalidGraphError, UnknownVertexError

HALF_EDGE_SEPARATOR = "#"


def half_edge_ids(edge_id: str) -> tuple[str, str]:
    """Return the two half-edge identifiers generated for an edge."""
    return (f"{edge_id}{HALF_EDGE_SEPARATOR}0", f"{edge_id}{HALF_EDGE_SEPARATOR}1")


@dataclass(frozen=True)
class Edge:
    """An orbit pair of half-edges with its derived endpoints."""

    id: str
    half_edges: tuple[str, str]
    ends: tuple[str, str]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    def other_end(self, v: str) -> str:
        """Return the endpoint opposite to ``v``."""
        if v == self.ends[0]:
            return self.ends[1]
        if v == self.ends[1]:
            return self.ends[0]
        raise UnknownVertexError(f"vertex {v!r} is not an endpoint of edge {self.id!r}")


@dataclass(frozen=True)
class WeightedGraph:
    """A connected multigraph with vertex weights, half-edges and legs.

    Storage is a set of tuples so that graphs are immutable and hashable.
    The order of ``vertex_weights`` is the canonical vertex order used by
    every deterministic search in the package; the order of ``half_edges``
    fixes the canonical edge order.

    Use :meth:`from_edges` to build a graph from an edge list; the raw
    constructor exists for the JSON codec and for testing invalid input.
    """

    vertex_weights: tuple[tuple[str, int], ...]
    half_edges: tuple[tuple[str, str], ...]  # (half-edge, endpoint vertex)
    involution: tuple[tuple[str, str], ...]
    legs: tuple[tuple[str, str], ...] = ()  # (leg, endpoint vertex)

    @classmethod
    def from_edges(
        cls,
        weights: Mapping[str, int] | Iterable[str],
        edges: Mapping[str, tuple[str, str]] | Iterable[tuple[str, str]],
        legs: Mapping[str, str] | None = None,
    ) -> "WeightedGraph":
        """Build a graph from vertices and an edge list.

        Args:
            weights: Vertex weights in canonical order, or a plain vertex
                list (all weights zero).
            edges: Edge id to endpoint pair, or a sequence of endpoint pairs
                that get the ids ``e1``, ``e2``, ...
            legs: Optional leg id to vertex mapping.

        Returns:
            The graph. It is not validated; call :func:`validate` or
            :func:`require_valid`.
        """
        if isinstance(weights, Mapping):
            vertex_weights = tuple((str(v), int(w)) for v, w in weights.items())
        else:
            vertex_weights = tuple((str(v), 0) for v in weights)
        if isinstance(edges, Mapping):
            items = list(edges.items())
        else:
            items = [(f"e{i}", ends) for i, ends in enumerate(edges, start=1)]
        half_edges: list[tuple[str, str]] = []
        involution: list[tuple[str, str]] = []
        for edge_id, (a, b) in items:
            h0, h1 = half_edge_ids(edge_id)
            half_edges += [(h0, a), (h1, b)]
            involution += [(h0, h1), (h1, h0)]
        leg_items = tuple((str(k), str(v)) for k, v in (legs or {}).items())
        return cls(vertex_weights, tuple(half_edges), tuple(involution), leg_items)

    # Derived views

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertex_weights)

    @cached_property
    def weights(self) -> dict[str, int]:
        return dict(self.vertex_weights)

    @cached_property
    def endpoint(self) -> dict[str, str]:
        return dict(self.half_edges)

    @cached_property
    def opposite(self) -> dict[str, str]:
        return dict(self.involution)

    @cached_property
    def leg_vertex(self) -> dict[str, str]:
        return dict(self.legs)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in canonical order; malformed half-edge pairs are skipped."""
        seen: set[str] = set()
        result: list[Edge] = []
        for h, v in self.half_edges:
            if h in seen:
                continue
            hbar = self.opposite.get(h)
            if hbar is None or hbar == h or hbar not in self.endpoint or self.opposite.get(hbar) != h:
                continue
            seen.update((h, hbar))
            result.append(Edge(_edge_id(h, hbar), (h, hbar), (v, self.endpoint[hbar])))
        return tuple(result)

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def incidence(self) -> dict[str, tuple[Edge, ...]]:
        """Edges incident to each vertex; a loop is listed once."""
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = e.ends
            if a in table:
                table[a].append(e)
            if b in table and b != a:
                table[b].append(e)
        return {v: tuple(es) for v, es in table.items()}

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise UnknownVertexError(f"unknown edge {edge_id!r}") from None

    def weight(self, v: str) -> int:
        try:
            return self.weights[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def legs_at(self, v: str) -> int:
        return sum(1 for _, u in self.legs if u == v)

    def multiplicity(self, u: str, v: str) -> int:
        """Number of edges joining ``u`` and ``v`` (loops when ``u == v``)."""
        return sum(1 for e in self.incidence.get(u, ()) if set(e.ends) == {u, v})

    @property
    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    def __len__(self) -> int:
        return len(self.vertex_weights)


def _edge_id(h: str, hbar: str) -> str:
    left, _, _ = h.rpartition(HALF_EDGE_SEPARATOR)
    right, _, _ = hbar.rpartition(HALF_EDGE_SEPARATOR)
    if left and left == right:
        return left
    return f"{h}~{hbar}"


def to_networkx(g: WeightedGraph) -> nx.MultiGraph:
    """Return a networkx multigraph keyed by edge id.

    Nodes carry ``weight`` and ``legs`` attributes.
    """
    graph = nx.MultiGraph()
    for v, w in g.vertex_weights:
        graph.add_node(v, weight=w, legs=g.legs_at(v))
    for e in g.edges:
        graph.add_edge(*e.ends, key=e.id)
    return graph


def validate(g: WeightedGraph) -> list[str]:
    """Return every violated structural invariant; an empty list means valid."""
    violations: list[str] = []
    vertex_set = set(g.vertices)
    if not g.vertices:
        violations.append("graph has no vertices")
    if len(vertex_set) != len(g.vertices):
        violations.append("duplicate vertex identifier")
    for v, w in g.vertex_weights:
        if w < 0:
            violations.append(f"negative weight at {v}")
    if len({h for h, _ in g.half_edges}) != len(g.half_edges):
        violations.append("duplicate half-edge identifier")
    for h, v in g.half_edges:
        if v not in vertex_set:
            violations.append(f"half-edge {h} has unknown endpoint {v}")
    opposite = g.opposite
    if set(opposite) != set(g.endpoint):
        violations.append("involution domain differs from the half-edge set")
    for h, hbar in g.involution:
        if h == hbar:
            violations.append(f"involution has fixed point: {h}")
        elif hbar not in g.endpoint:
            violations.append(f"involution maps {h} to unknown half-edge {hbar}")
        elif opposite.get(hbar) != h:
            violations.append(f"involution is not an involution at {h}")
    for leg, v in g.legs:
        if v not in vertex_set:
            violations.append(f"leg {leg} has unknown endpoint {v}")
    if vertex_set and not nx.is_connected(to_networkx(g)):
        violations.append("disconnected")
    return violations


def require_valid(g: WeightedGraph) -> WeightedGraph:
    """Return ``g`` or raise :class:`InvalidGraphError` listing its violations."""
    violations = validate(g)
    if violations:
        raise InvalidGraphError(violations)
    return g


def genus(g: WeightedGraph) -> int:
    """First Betti number plus total weight; legs do not contribute."""
    return len(g.edges) - len(g.vertices) + 1 + g.total_weight


def edge_valency(g: WeightedGraph, v: str) -> int:
    """Number of half-edges at ``v``; a loop counts twice."""
    if v not in g.weights:
        raise UnknownVertexError(f"unknown vertex {v!r}")
    return sum(1 for _, u in g.half_edges if u == v)


def valency(g: WeightedGraph, v: str) -> int:
    """Half-edges plus legs at ``v``."""
    return edge_valency(g, v) + g.legs_at(v)


def bridges(g: WeightedGraph) -> tuple[str, ...]:
    """Identifiers of the cut edges of ``g`` in canonical order."""
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(e.ends for e in g.edges if not e.is_loop)
    # networkx cut edges ignore multiplicity; a parallel pair is never a bridge
    cut = {frozenset(pair) for pair in nx.bridges(simple)}
    return tuple(
        e.id
        for e in g.edges
        if frozenset(e.ends) in cut and g.multiplicity(*e.ends) == 1
    )


def is_2_edge_connected(g: WeightedGraph) -> bool:
    return not bridges(g)


def is_stable(g: WeightedGraph) -> bool:
    return all(w + valency(g, v) >= 3 for v, w in g.vertex_weights)


def is_semistable(g: WeightedGraph) -> bool:
    return all(w + valency(g, v) >= 2 for v, w in g.vertex_weights)


def is_tree(g: WeightedGraph) -> bool:
    """A tree is a connected graph of genus zero."""
    return not validate(g) and genus(g) == 0
