"""Reduction, linear equivalence, rank and Brill-Noether loci."""

import itertools
import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

from ..config import Config, resolve
from ..errors import EnumerationCapError, PreconditionError, UnknownVertexError
from ..graph import WeightedGraph, genus, weightless_model
from .chipfiring import engine
from .divisor import Divisor, PicardClass, transport
from .jacobian import jacobian_order

log = logging.getLogger(__name__)


def reduce(g: WeightedGraph, divisor: Divisor, q: str) -> Divisor:
    """Return the ``q``-reduced divisor equivalent to ``divisor``.

    Args:
        g: A loopless weightless graph.
        divisor: Divisor over ``g``.
        q: Base vertex.

    Raises:
        UnknownVertexError: If ``q`` is not a vertex of ``g``.
        PreconditionError: If ``g`` has loops or weights.
    """
    if q not in g.weights:
        raise UnknownVertexError(f"unknown base vertex {q!r}")
    chips = engine(g)
    return Divisor.from_values(g.vertices, chips.reduce(Divisor.on(g, divisor.as_dict).values, chips.index(q)))


def _reduced_values(g: WeightedGraph, divisor: Divisor) -> tuple[int, ...]:
    model = weightless_model(g)
    return engine(model).reduce(transport(g, divisor).values, 0)


def is_equivalent(g: WeightedGraph, d1: Divisor, d2: Divisor) -> bool:
    """Linear equivalence, decided on the weightless model."""
    if d1.degree != d2.degree:
        return False
    return _reduced_values(g, d1) == _reduced_values(g, d2)


def picard_class(g: WeightedGraph, divisor: Divisor) -> PicardClass:
    """The class of ``divisor``, represented on the weightless model."""
    model = weightless_model(g)
    return PicardClass(Divisor.from_values(model.vertices, _reduced_values(g, divisor)), model.vertices[0])


def rank(g: WeightedGraph, divisor: Divisor) -> int:
    """Rank of ``divisor``, computed on the weightless model of ``g``."""
    model = weightless_model(g)
    return engine(model).rank(transport(g, divisor).values)


def enumerate_classes(g: WeightedGraph, d: int, config: Config | None = None) -> list[PicardClass]:
    """One reduced representative per class of degree ``d``.

    Representatives are ``(d - deg c)q + c`` for the superstables ``c``
    relative to the first vertex ``q`` of the weightless model.

    Raises:
        EnumerationCapError: If the Jacobian has more elements than the cap.
    """
    cap = resolve(config).enumeration_cap
    order = jacobian_order(g)
    if order > cap:
        raise EnumerationCapError(f"jacobian order {order} exceeds the cap {cap}")
    model = weightless_model(g)
    chips = engine(model)
    classes = []
    for config_values in chips.superstables(0, cap):
        values = (d - sum(config_values),) + config_values[1:]
        classes.append(PicardClass(Divisor.from_values(model.vertices, values), model.vertices[0]))
    return classes


def _anchored_classes(g: WeightedGraph, d: int, r: int) -> Iterator[Divisor]:
    """Reduced forms of ``r*q + E`` over effective ``E`` of degree ``d - r``.

    Every class of rank at least ``r`` contains such a divisor, since
    ``D - r*q`` is equivalent to an effective one.
    """
    model = weightless_model(g)
    chips = engine(model)
    seen: set[tuple[int, ...]] = set()
    for support in itertools.combinations_with_replacement(range(len(model)), d - r):
        values = [0] * len(model)
        values[0] = r
        for v in support:
            values[v] += 1
        reduced = chips.reduce(values, 0)
        if reduced not in seen:
            seen.add(reduced)
            yield Divisor.from_values(model.vertices, reduced)


def W_r_d(g: WeightedGraph, d: int, r: int, config: Config | None = None) -> list[PicardClass]:
    """Classes of degree ``d`` and rank at least ``r``, ordered by representative.

    Candidates are the anchored divisors ``r*q + E`` when there are fewer of
    them than Jacobian elements, and all classes otherwise.
    """
    if d < 0 or r < 0:
        raise PreconditionError("W_r_d needs d >= 0 and r >= 0")
    if r > d:
        return []
    model = weightless_model(g)
    chips = engine(model)
    anchored = math.comb(len(model) + d - r - 1, d - r)
    # a single chip beyond the anchor gives at most one candidate per vertex
    if anchored <= len(model) or anchored < min(jacobian_order(g), resolve(config).enumeration_cap):
        candidates = list(_anchored_classes(g, d, r))
    else:
        candidates = [c.representative for c in enumerate_classes(g, d, config)]
    found = sorted(
        (PicardClass(D, model.vertices[0]) for D in candidates if chips.rank(D.values) >= r),
        key=lambda c: c.representative.values,
    )
    log.debug("W^%d_%d: %d classes from %d candidates", r, d, len(found), len(candidates))
    return found


@dataclass(frozen=True)
class DivisorialResult:
    """Outcome of a divisorial gonality test."""

    decision: bool
    witness: Divisor | None = None


def is_divisorially_gonal(g: WeightedGraph, d: int, config: Config | None = None) -> DivisorialResult:
    """Whether some degree-``d`` divisor has rank at least 1.

    The witness is the lexicographically least reduced representative.
    """
    classes = W_r_d(g, d, 1, config)
    if not classes:
        return DivisorialResult(False)
    return DivisorialResult(True, min((c.representative for c in classes), key=lambda D: D.values))


def divisorial_gonality(g: WeightedGraph, max_degree: int | None = None, config: Config | None = None) -> int | None:
    """Least ``d`` with a rank-1 divisor of degree ``d``, or None past ``max_degree``."""
    # a divisor of degree g + 1 always has rank >= 1
    bound = genus(g) + 1 if max_degree is None else max_degree
    for d in range(1, bound + 1):
        if is_divisorially_gonal(g, d, config).decision:
            return d
    return None
