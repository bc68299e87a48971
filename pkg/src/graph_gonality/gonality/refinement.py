"""Search for refinements that carry a rank-r divisor of degree d."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from ..config import Config, resolve
from ..divisors import Divisor, W_r_d
from ..errors import PreconditionError
from ..graph import WeightedGraph, refine

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefinementResult:
    """A refinement plan, the refined graph and a witness divisor on it."""

    plan: tuple[tuple[str, int], ...]
    graph: WeightedGraph
    witness: Divisor

    @property
    def subdivisions(self) -> int:
        """Number of inserted vertices."""
        return sum(count - 1 for _, count in self.plan)


def subdivision_plans(g: WeightedGraph, max_subdiv: int) -> Iterator[dict[str, int]]:
    """Plans with at most ``max_subdiv`` edges per original edge, by increasing size.

    Among plans of equal size, earlier edges are subdivided first.
    """
    edges = [e.id for e in g.edges]
    extra = max_subdiv - 1

    def split(total: int, position: int) -> Iterator[list[int]]:
        if position == len(edges):
            if total == 0:
                yield []
            return
        for k in range(min(extra, total), -1, -1):
            for rest in split(total - k, position + 1):
                yield [k] + rest

    for total in range(len(edges) * extra + 1):
        for counts in split(total, 0):
            yield {e: k + 1 for e, k in zip(edges, counts)}


def find_divisorial_refinement(
    g: WeightedGraph,
    d: int,
    r: int = 1,
    max_subdiv: int | None = None,
    config: Config | None = None,
) -> RefinementResult | None:
    """First refinement, in increasing size, with a degree-``d`` divisor of rank at least ``r``.

    Returns:
        The refinement with the least reduced witness, or None when no plan
        within ``max_subdiv`` edges per original edge works.
    """
    config = resolve(config)
    max_subdiv = config.refinement_max_subdiv if max_subdiv is None else max_subdiv
    if d < 1 or r < 1 or max_subdiv < 1:
        raise PreconditionError("refinement search needs d, r and max_subdiv at least 1")
    tried = 0
    for plan in subdivision_plans(g, max_subdiv):
        tried += 1
        refined = refine(g, plan)
        classes = W_r_d(refined, d, r, config)
        if classes:
            witness = min((c.representative for c in classes), key=lambda D: D.values)
            log.debug("refinement found after %d plans", tried)
            return RefinementResult(tuple(sorted(plan.items())), refined, witness)
    log.debug("no refinement among %d plans", tried)
    return None
