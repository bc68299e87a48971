"""Chip-firing on loopless weightless multigraphs.

Divisors are handled as integer tuples in the canonical vertex order of
the graph; vertices are addressed by index. The public wrappers in
:mod:`.rank` translate from and to :class:`~.divisor.Divisor`.
"""

import logging
from collections import deque
from collections.abc import Sequence
from functools import lru_cache

from ..errors import EnumerationCapError, PreconditionError
from ..graph import WeightedGraph, genus

log = logging.getLogger(__name__)

Values = tuple[int, ...]


class ChipFiringGraph:
    """Reduction, burning and rank on a fixed loopless weightless graph."""

    # entries kept by the rank memo before it is cleared
    memo_limit = 200_000

    def __init__(self, g: WeightedGraph) -> None:
        if g.has_loops or g.total_weight:
            raise PreconditionError("chip-firing runs on loopless weightless graphs")
        self.graph = g
        self.vertices = g.vertices
        self.size = len(g.vertices)
        self.genus = genus(g)
        index = {v: i for i, v in enumerate(self.vertices)}
        counts: list[dict[int, int]] = [{} for _ in self.vertices]
        for e in g.edges:
            a, b = index[e.ends[0]], index[e.ends[1]]
            counts[a][b] = counts[a].get(b, 0) + 1
            counts[b][a] = counts[b].get(a, 0) + 1
        self.neighbors: list[tuple[tuple[int, int], ...]] = [tuple(sorted(c.items())) for c in counts]
        self.degrees = [sum(c.values()) for c in counts]
        self._distances: dict[int, list[int]] = {}
        self.canonical: Values = tuple(d - 2 for d in self.degrees)
        self._memo: dict[tuple[Values, int], bool] = {}

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def distances(self, q: int) -> list[int]:
        """Breadth-first distances from ``q``."""
        if q not in self._distances:
            dist = [-1] * self.size
            dist[q] = 0
            queue: deque[int] = deque([q])
            while queue:
                current = queue.popleft()
                for neighbor, _ in self.neighbors[current]:
                    if dist[neighbor] == -1:
                        dist[neighbor] = dist[current] + 1
                        queue.append(neighbor)
            self._distances[q] = dist
        return self._distances[q]

    def burn(self, values: Sequence[int], q: int) -> tuple[set[int], list[int]]:
        """Run the burning process from ``q``.

        A vertex catches fire once the number of edges to burnt vertices
        exceeds its chips.

        Returns:
            The burnt set and, per vertex, the number of edges to burnt
            vertices.
        """
        burnt = {q}
        threat = [0] * self.size
        queue: deque[int] = deque([q])
        while queue:
            current = queue.popleft()
            for neighbor, mult in self.neighbors[current]:
                if neighbor in burnt:
                    continue
                threat[neighbor] += mult
                if threat[neighbor] > values[neighbor]:
                    burnt.add(neighbor)
                    queue.append(neighbor)
        return burnt, threat

    def is_superstable(self, values: Sequence[int], q: int) -> bool:
        return len(self.burn(values, q)[0]) == self.size

    def _fire_set(self, chips: list[int], fired: set[int], times: int) -> None:
        for v in fired:
            for neighbor, mult in self.neighbors[v]:
                if neighbor not in fired:
                    chips[v] -= times * mult
                    chips[neighbor] += times * mult

    def reduce(self, values: Sequence[int], q: int) -> Values:
        """Return the ``q``-reduced divisor equivalent to ``values``."""
        chips = list(values)
        dist = self.distances(q)
        # make every vertex but q non-negative, outermost layer first
        for layer in range(max(dist), 0, -1):
            inner = {v for v in range(self.size) if dist[v] < layer}
            times = 0
            for v in range(self.size):
                if dist[v] == layer and chips[v] < 0:
                    gain = sum(m for u, m in self.neighbors[v] if u in inner)
                    times = max(times, -(chips[v] // gain))
            if times:
                self._fire_set(chips, inner, times)
        # burn and fire the unburnt set until everything burns
        while True:
            burnt, threat = self.burn(chips, q)
            if len(burnt) == self.size:
                return tuple(chips)
            unburnt = set(range(self.size)) - burnt
            times = min(chips[v] // threat[v] for v in unburnt if threat[v])
            self._fire_set(chips, unburnt, times)

    def is_effective_class(self, values: Sequence[int]) -> bool:
        return sum(values) >= 0 and self.reduce(values, 0)[0] >= 0

    def rank(self, values: Sequence[int]) -> int:
        """Rank of ``values``.

        The top level always takes one step of ``r(D) = 1 + min_v r(D - v)``;
        below it, divisors of degree above ``g - 1`` are exchanged for
        ``K - D`` through Riemann-Roch, so every search runs in degree at
        most ``g - 1``.
        """
        degree = sum(values)
        if degree < 0:
            return -1
        if degree > 2 * self.genus - 2:
            return degree - self.genus
        if not self.is_effective_class(values):
            return -1
        best = degree
        for v in range(self.size):
            best = min(best, self._rank(_lower(values, v)))
            if best == -1:
                break
        return best + 1

    def _rank(self, values: Sequence[int]) -> int:
        degree = sum(values)
        if degree < 0:
            return -1
        if degree > 2 * self.genus - 2:
            return degree - self.genus
        if degree > self.genus - 1:
            dual = tuple(k - d for k, d in zip(self.canonical, values))
            return degree - self.genus + 1 + self._rank(dual)
        if not self.is_effective_class(values):
            return -1
        k = 0
        # 2r <= deg in the special range
        while 2 * (k + 1) <= degree and self.at_least(values, k + 1):
            k += 1
        return k

    def at_least(self, values: Sequence[int], k: int) -> bool:
        """Whether ``values - E`` is equivalent to an effective divisor for
        every effective ``E`` of degree ``k``, for ``values`` of degree at
        most ``2g - 2``."""
        if k <= 0:
            return self.is_effective_class(values)
        if 2 * k > sum(values):
            return False
        reduced = self.reduce(values, 0)
        key = (reduced, k)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        # D - k*v is effective iff the v-reduced form keeps k chips on v
        answer = all(self.reduce(reduced, v)[v] >= k for v in range(self.size))
        if answer and k > 1:
            answer = all(self.at_least(_lower(reduced, v), k - 1) for v in range(self.size))
        if len(self._memo) >= self.memo_limit:
            self._memo.clear()
        self._memo[key] = answer
        return answer

    def superstables(self, q: int, cap: int) -> list[Values]:
        """All superstable configurations relative to ``q`` (zero at ``q``).

        Superstables are closed under decreasing entries, so they are grown
        chip by chip in index order, visiting each one once.

        Raises:
            EnumerationCapError: If more than ``cap`` configurations exist.
        """
        others = [v for v in range(self.size) if v != q]
        config = [0] * self.size
        found: list[Values] = []

        def grow(start: int) -> None:
            found.append(tuple(config))
            if len(found) > cap:
                raise EnumerationCapError(f"more than {cap} divisor classes")
            for position in range(start, len(others)):
                v = others[position]
                config[v] += 1
                if self.is_superstable(config, q):
                    grow(position)
                config[v] -= 1

        grow(0)
        log.debug("enumerated %d superstables on %d vertices", len(found), self.size)
        return found


def _lower(values: Sequence[int], v: int) -> Values:
    lowered = list(values)
    lowered[v] -= 1
    return tuple(lowered)


@lru_cache(maxsize=64)
def engine(g: WeightedGraph) -> ChipFiringGraph:
    """Shared engine per graph, so rank memoization survives across calls."""
    return ChipFiringGraph(g)
