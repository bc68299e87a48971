"""Exhaustive search for degree-d morphisms onto trees.

A non-degenerate morphism onto a tree is determined, up to renaming the
tree, by its vertex fibers. The search therefore walks set partitions of
the vertices of the loopless model (every block has at most ``d``
vertices because local degrees are positive and sum to ``d``), keeps the
partitions whose quotient is a tree, then chooses local degrees per fiber
and indices per tree edge.

For a morphism onto a weightless tree the ramification at ``v`` only
depends on the local degree ``m``:
``sum over edges at v of (r - 1) = m * val_T(phi(v)) - val(v)``. The
harmonic inequality and the Hurwitz completion count are therefore
checked before any index is chosen.
"""

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Literal

from ..config import Config, resolve
from ..errors import DegreeCapError, PreconditionError
from ..graph import WeightedGraph, loopless_model, strip_legs
from ..hurwitz import PartitionSet, is_hurwitz_vertex, simple_deficit
from ..morphism import IndexedMorphism, certify, vertex_partition_set

log = logging.getLogger(__name__)

Mode = Literal["harmonic", "pseudo_harmonic"]


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class VertexHurwitzData:
    """Local ramification profile of a witness at one source vertex."""

    vertex: str
    local_degree: int
    partitions: PartitionSet
    transpositions: int  # simple partitions appended by the completion
    ok: bool


@dataclass(frozen=True)
class GonalityReport:
    """Outcome of a search; ``decision`` is None when the budget ran out.

    ``capped`` counts vertex profiles the Hurwitz solver could not decide
    under its degree cap; a search that found nothing else is then
    inconclusive as well.
    """

    decision: bool | None
    degree: int
    mode: Mode
    hurwitz: bool
    witness: IndexedMorphism | None = None
    vertex_data: tuple[VertexHurwitzData, ...] = ()
    nodes: int = 0
    trees_tried: int = 0
    capped: int = 0

    @property
    def status(self) -> str:
        return "inconclusive" if self.decision is None else "decided"

    @property
    def hurwitz_ok(self) -> bool | None:
        if self.witness is None:
            return None
        return all(item.ok for item in self.vertex_data)


@dataclass
class _Fibers:
    block_of: list[int]
    members: list[list[int]]
    tree_edges: list[tuple[int, int]]
    tree_degree: list[int]
    # per tree edge, the source edges (edge position, vertex in first block, vertex in second)
    crossing: dict[tuple[int, int], list[tuple[int, int, int]]] = field(default_factory=dict)


class MorphismSearch:
    """One exhaustive search for a fixed graph, degree and mode."""

    def __init__(
        self,
        g: WeightedGraph,
        d: int,
        mode: Mode = "harmonic",
        hurwitz: bool = True,
        config: Config | None = None,
    ) -> None:
        if d < 1:
            raise PreconditionError(f"degree must be positive, got {d}")
        if mode not in ("harmonic", "pseudo_harmonic"):
            raise PreconditionError(f"unknown search mode {mode!r}")
        self.config = resolve(config)
        self.graph = strip_legs(loopless_model(g))
        self.d = d
        self.mode = mode
        self.hurwitz = hurwitz
        self.names = self.graph.vertices
        self.n = len(self.names)
        index = {v: i for i, v in enumerate(self.names)}
        self.weights = [self.graph.weights[v] for v in self.names]
        self.edges = [(e.id, index[e.ends[0]], index[e.ends[1]]) for e in self.graph.edges]
        self.valency = [0] * self.n
        for _, a, b in self.edges:
            self.valency[a] += 1
            self.valency[b] += 1
        self.nodes = 0
        self.trees = 0
        self.capped = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.config.node_budget:
            raise _BudgetExceeded

    def _report(self, decision: bool | None, witness=None, vertex_data=()) -> GonalityReport:
        return GonalityReport(
            decision,
            self.d,
            self.mode,
            self.hurwitz,
            witness,
            tuple(vertex_data),
            self.nodes,
            self.trees,
            self.capped,
        )

    def run(self) -> GonalityReport:
        try:
            for block_of in self._set_partitions():
                fibers = self._fibers(block_of)
                if fibers is None:
                    continue
                self.trees += 1
                found = self._search_fibers(fibers)
                if found is not None:
                    local, indices = found
                    witness = self._witness(fibers, local, indices)
                    log.debug("degree %d witness after %d nodes, %d trees", self.d, self.nodes, self.trees)
                    return self._report(True, witness, self._vertex_data(witness))
        except _BudgetExceeded:
            log.warning("node budget %d exhausted at degree %d", self.config.node_budget, self.d)
            return self._report(None)
        if self.capped:
            log.warning(
                "%d vertex profiles above the Hurwitz cap %d left undecided at degree %d",
                self.capped,
                self.config.hurwitz_degree_cap,
                self.d,
            )
            return self._report(None)
        log.debug("no degree %d morphism: %d nodes, %d trees", self.d, self.nodes, self.trees)
        return self._report(False)

    # Fibers

    def _set_partitions(self) -> Iterator[list[int]]:
        """Restricted growth strings with block sizes at most ``d``."""
        block_of = [0] * self.n
        sizes: list[int] = []

        def assign(i: int) -> Iterator[list[int]]:
            if i == self.n:
                yield list(block_of)
                return
            for b in range(len(sizes) + 1):
                if b == len(sizes):
                    sizes.append(0)
                if sizes[b] < self.d:
                    sizes[b] += 1
                    block_of[i] = b
                    yield from assign(i + 1)
                    sizes[b] -= 1
                if sizes[b] == 0:
                    sizes.pop()

        if self.n:
            yield from assign(0)

    def _fibers(self, block_of: list[int]) -> _Fibers | None:
        self._tick()
        k = max(block_of) + 1
        crossing: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for position, (_, a, b) in enumerate(self.edges):
            ba, bb = block_of[a], block_of[b]
            if ba == bb:
                continue
            if ba > bb:
                a, b, ba, bb = b, a, bb, ba
            crossing.setdefault((ba, bb), []).append((position, a, b))
        if len(crossing) != k - 1:
            return None
        parent = list(range(k))

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        for x, y in crossing:
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            parent[rx] = ry
        members = [[v for v in range(self.n) if block_of[v] == b] for b in range(k)]
        tree_degree = [0] * k
        for x, y in crossing:
            tree_degree[x] += 1
            tree_degree[y] += 1
        # every vertex needs an edge over every tree edge at its image
        for (x, y), edges in crossing.items():
            if {a for _, a, _ in edges} != set(members[x]) or {b for _, _, b in edges} != set(members[y]):
                return None
        return _Fibers(block_of, members, list(crossing), tree_degree, crossing)

    # Local degrees

    def _local_range(self, v: int, fibers: _Fibers) -> range:
        block = fibers.block_of[v]
        val_t = fibers.tree_degree[block]
        low = 1
        for (x, y), edges in fibers.crossing.items():
            if block in (x, y):
                side = 1 if x == block else 2
                low = max(low, sum(1 for e in edges if e[side] == v))
        high = self.d - (len(fibers.members[block]) - 1)
        val, w = self.valency[v], self.weights[v]
        if self.mode == "harmonic":
            # m * (val_T - 2) <= val + 2w - 2
            bound = val + 2 * w - 2
            if val_t > 2:
                high = min(high, bound // (val_t - 2))
            elif val_t < 2:
                low = max(low, -(bound // (2 - val_t)))
        return range(low, high + 1)

    def _hurwitz_count(self, v: int, m: int, fibers: _Fibers) -> int:
        horizontal = sum(
            1 for edges in fibers.crossing.values() for e in edges if v in (e[1], e[2])
        )
        ramified = m * fibers.tree_degree[fibers.block_of[v]] - horizontal
        return 2 * (m - 1 + self.weights[v]) - ramified

    def _local_ok(self, v: int, m: int, fibers: _Fibers) -> bool:
        if not self.hurwitz:
            return True
        k = self._hurwitz_count(v, m, fibers)
        return k >= 0 and not (k > 0 and m == 1)

    def _local_degrees(self, fibers: _Fibers) -> Iterator[list[int]]:
        local = [0] * self.n
        ranges = {v: [m for m in self._local_range(v, fibers) if self._local_ok(v, m, fibers)] for v in range(self.n)}

        def fill(block: int) -> Iterator[list[int]]:
            if block == len(fibers.members):
                yield list(local)
                return
            members = fibers.members[block]
            for choice in itertools.product(*(ranges[v] for v in members)):
                self._tick()
                if sum(choice) != self.d:
                    continue
                for v, m in zip(members, choice):
                    local[v] = m
                yield from fill(block + 1)

        yield from fill(0)

    # Indices

    def _edge_solutions(self, edges: list[tuple[int, int, int]], local: list[int]) -> Iterator[list[int]]:
        """Positive indices on ``edges`` with index sums ``local`` at every endpoint."""
        remaining = {}
        left_count: dict[int, int] = {}
        for _, a, b in edges:
            remaining[a], remaining[b] = local[a], local[b]
            left_count[a] = left_count.get(a, 0) + 1
            left_count[b] = left_count.get(b, 0) + 1
        chosen: list[int] = []

        def place(i: int) -> Iterator[list[int]]:
            if i == len(edges):
                yield list(chosen)
                return
            self._tick()
            _, a, b = edges[i]
            left_count[a] -= 1
            left_count[b] -= 1
            top = min(remaining[a] - left_count[a], remaining[b] - left_count[b])
            bottom = 1
            if left_count[a] == 0:
                bottom = max(bottom, remaining[a])
            if left_count[b] == 0:
                bottom = max(bottom, remaining[b])
            for r in range(bottom, top + 1):
                if left_count[a] == 0 and r != remaining[a]:
                    continue
                if left_count[b] == 0 and r != remaining[b]:
                    continue
                remaining[a] -= r
                remaining[b] -= r
                chosen.append(r)
                yield from place(i + 1)
                chosen.pop()
                remaining[a] += r
                remaining[b] += r
            left_count[a] += 1
            left_count[b] += 1

        yield from place(0)

    def _partition_ok(self, v: int, local: list[int], indices: dict[int, int], fibers: _Fibers) -> bool:
        try:
            return is_hurwitz_vertex(self._partition_set(v, local, indices, fibers), self.weights[v], self.config)
        except DegreeCapError:
            self.capped += 1
            return False

    def _partition_set(self, v: int, local: list[int], indices: dict[int, int], fibers: _Fibers) -> PartitionSet:
        block = fibers.block_of[v]
        parts = []
        for (x, y), edges in fibers.crossing.items():
            if block in (x, y):
                parts.append([indices[p] for p, a, b in edges if v in (a, b)])
        return PartitionSet.of(local[v], parts)

    def _search_fibers(self, fibers: _Fibers) -> tuple[list[int], dict[int, int]] | None:
        for local in self._local_degrees(fibers):
            found = self._search_indices(fibers, local)
            if found is not None:
                return local, found
        return None

    def _search_indices(self, fibers: _Fibers, local: list[int]) -> dict[int, int] | None:
        tree_edges = fibers.tree_edges
        needs_solver = self.hurwitz and any(m > 3 for m in local)
        # a vertex is checked once every tree edge at its fiber has indices
        last_edge: dict[int, int] = {}
        for position, (x, y) in enumerate(tree_edges):
            last_edge[x] = position
            last_edge[y] = position
        indices: dict[int, int] = {}

        def choose(position: int) -> bool:
            if position == len(tree_edges):
                return True
            edges = fibers.crossing[tree_edges[position]]
            for solution in self._edge_solutions(edges, local):
                for (p, _, _), r in zip(edges, solution):
                    indices[p] = r
                if needs_solver:
                    finished = [b for b, last in last_edge.items() if last == position]
                    if not all(
                        self._partition_ok(v, local, indices, fibers)
                        for b in finished
                        for v in fibers.members[b]
                    ):
                        continue
                if choose(position + 1):
                    return True
                if not needs_solver:
                    # tree edges are independent without partition checks
                    return False
            return False

        if needs_solver and not tree_edges:
            if not all(self._partition_ok(v, local, indices, fibers) for v in range(self.n)):
                return None
        return dict(indices) if choose(0) else None

    # Witness

    def _witness(self, fibers: _Fibers, local: list[int], indices: dict[int, int]) -> IndexedMorphism:
        names = [f"t{b + 1}" for b in range(len(fibers.members))]
        target_edges = {f"{names[x]}-{names[y]}": (names[x], names[y]) for x, y in fibers.tree_edges}
        target = WeightedGraph.from_edges(names, target_edges)
        vertex_map = {self.names[v]: names[fibers.block_of[v]] for v in range(self.n)}
        images: dict[str, tuple[str | None, int]] = {}
        for position, (edge_id, a, b) in enumerate(self.edges):
            x, y = sorted((fibers.block_of[a], fibers.block_of[b]))
            if x == y:
                images[edge_id] = (None, 0)
            else:
                images[edge_id] = (f"{names[x]}-{names[y]}", indices[position])
        prescribed = None if target_edges else {self.names[v]: local[v] for v in range(self.n)}
        return IndexedMorphism.build(self.graph, target, vertex_map, images, prescribed)

    def _vertex_data(self, witness: IndexedMorphism) -> list[VertexHurwitzData]:
        cert = certify(witness)
        data = []
        for v in self.graph.vertices:
            P = vertex_partition_set(witness, v)
            k = simple_deficit(P, self.graph.weights[v])
            ok = is_hurwitz_vertex(P, self.graph.weights[v], self.config) if cert.m[v] <= self.config.hurwitz_degree_cap else False
            data.append(VertexHurwitzData(v, cert.m[v], P, k, ok))
        return data


def find_harmonic_to_tree(
    g: WeightedGraph,
    d: int,
    mode: Mode = "harmonic",
    hurwitz: bool = True,
    config: Config | None = None,
) -> GonalityReport:
    """Search for a non-degenerate degree-``d`` morphism from ``g`` onto a tree.

    Args:
        g: Any valid graph; loops are subdivided and legs ignored.
        d: Degree.
        mode: ``harmonic`` or the relaxed ``pseudo_harmonic``.
        hurwitz: Require every vertex profile to complete, with
            transpositions, to a Hurwitz set of genus ``w(v)``.
        config: Node budget and Hurwitz degree cap.

    Returns:
        The report; its decision is None when the node budget ran out.
    """
    return MorphismSearch(g, d, mode, hurwitz, config).run()


def is_geometrically_gonal(
    g: WeightedGraph, d: int, hurwitz: bool = True, config: Config | None = None
) -> GonalityReport:
    """Harmonic search with the Hurwitz condition on by default."""
    return find_harmonic_to_tree(g, d, "harmonic", hurwitz, config)


def geometric_gonality(g: WeightedGraph, max_degree: int, config: Config | None = None) -> int | None:
    """Least ``d <= max_degree`` with a degree-``d`` morphism of Hurwitz type to a tree.

    Returns None when no degree up to ``max_degree`` works.

    Raises:
        PreconditionError: If some search is inconclusive.
    """
    for d in range(1, max_degree + 1):
        report = is_geometrically_gonal(g, d, config=config)
        if report.decision is None:
            raise PreconditionError(f"search inconclusive at degree {d}")
        if report.decision:
            return d
    return None
