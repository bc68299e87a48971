"""Indexed morphisms between loopless weighted graphs."""

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from ..errors import MorphismError, UnknownVertexError
from ..graph import WeightedGraph, validate


@dataclass(frozen=True)
class EdgeImage:
    """Where a source edge goes: a target edge with a positive index, or a point."""

    target: str | None  # None means the edge is contracted
    index: int

    @property
    def contracted(self) -> bool:
        return self.target is None


CONTRACT = None


@dataclass(frozen=True)
class IndexedMorphism:
    """Vertex map, edge actions and indices between loopless graphs.

    ``multiplicities`` is only read when the target has no edges; there
    the local degrees cannot be recovered from indices and are part of the
    data.
    """

    source: WeightedGraph
    target: WeightedGraph
    vertex_images: tuple[tuple[str, str], ...]
    edge_images: tuple[tuple[str, EdgeImage], ...]
    multiplicities: tuple[tuple[str, int], ...] = ()

    @classmethod
    def build(
        cls,
        source: WeightedGraph,
        target: WeightedGraph,
        vertex_map: Mapping[str, str],
        edges: Mapping[str, tuple[str | None, int]],
        multiplicities: Mapping[str, int] | None = None,
    ) -> "IndexedMorphism":
        """Build a morphism and check its structure.

        Args:
            source: Loopless source graph.
            target: Loopless target graph.
            vertex_map: Image of every source vertex.
            edges: For every source edge, ``(target_edge, index)`` or
                ``(None, 0)`` for a contracted edge.
            multiplicities: Local degrees, for edgeless targets only.

        Raises:
            MorphismError: If the data is structurally invalid.
        """
        phi = cls(
            source,
            target,
            tuple((v, vertex_map[v]) for v in source.vertices if v in vertex_map),
            tuple((e.id, EdgeImage(*edges[e.id])) for e in source.edges if e.id in edges),
            tuple((multiplicities or {}).items()),
        )
        return require_valid_morphism(phi)

    @cached_property
    def vertex_map(self) -> dict[str, str]:
        return dict(self.vertex_images)

    @cached_property
    def edge_map(self) -> dict[str, EdgeImage]:
        return dict(self.edge_images)

    @cached_property
    def prescribed(self) -> dict[str, int]:
        return dict(self.multiplicities)

    def __call__(self, v: str) -> str:
        try:
            return self.vertex_map[v]
        except KeyError:
            raise UnknownVertexError(f"unknown source vertex {v!r}") from None

    def index(self, edge_id: str) -> int:
        """Index of a source edge; half-edges share the index of their edge."""
        return self.edge_map[edge_id].index

    def fiber(self, u: str) -> tuple[str, ...]:
        return tuple(v for v, image in self.vertex_images if image == u)


def morphism_violations(phi: IndexedMorphism) -> list[str]:
    """Structural problems of ``phi``; an empty list means valid."""
    problems = [f"source: {p}" for p in validate(phi.source)]
    problems += [f"target: {p}" for p in validate(phi.target)]
    if phi.source.has_loops or phi.target.has_loops:
        problems.append("morphisms need loopless source and target")
    target_vertices = set(phi.target.vertices)
    for v in phi.source.vertices:
        if v not in phi.vertex_map:
            problems.append(f"vertex {v} has no image")
        elif phi.vertex_map[v] not in target_vertices:
            problems.append(f"vertex {v} maps to unknown vertex {phi.vertex_map[v]}")
    for e in phi.source.edges:
        image = phi.edge_map.get(e.id)
        if image is None:
            problems.append(f"edge {e.id} has no image")
            continue
        ends = {phi.vertex_map.get(x) for x in e.ends}
        if image.contracted:
            if image.index != 0:
                problems.append(f"contracted edge {e.id} has index {image.index}")
            if len(ends) != 1:
                problems.append(f"contracted edge {e.id} joins different fibers")
        elif image.target not in phi.target.edge_map:
            problems.append(f"edge {e.id} maps to unknown edge {image.target}")
        else:
            if image.index < 1:
                problems.append(f"edge {e.id} has non-positive index {image.index}")
            if ends != set(phi.target.edge(image.target).ends):
                problems.append(f"edge {e.id} is not compatible with the endpoints of {image.target}")
    if phi.multiplicities and phi.target.edges:
        problems.append("multiplicities may only be prescribed over edgeless targets")
    return problems


def require_valid_morphism(phi: IndexedMorphism) -> IndexedMorphism:
    problems = morphism_violations(phi)
    if problems:
        raise MorphismError("; ".join(problems))
    return phi


def is_simple(phi: IndexedMorphism) -> bool:
    """All indices are at most 1."""
    return all(image.index <= 1 for _, image in phi.edge_images)


def identity_morphism(g: WeightedGraph, index: int = 1) -> IndexedMorphism:
    """The identity of ``g`` with every edge of the given index."""
    return IndexedMorphism.build(
        g,
        g,
        {v: v for v in g.vertices},
        {e.id: (e.id, index) for e in g.edges},
        {v: index for v in g.vertices} if not g.edges else None,
    )
