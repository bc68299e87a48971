"""Pseudo-harmonicity, harmonicity, pullback and ramification."""

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from ..divisors import Divisor, canonical_divisor
from ..errors import PreconditionError
from ..graph import genus
from ..hurwitz import PartitionSet
from .indexed import IndexedMorphism, require_valid_morphism


@dataclass(frozen=True)
class HarmonicCertificate:
    """Local degrees, global degree and ramification of a pseudo-harmonic morphism."""

    local_degrees: tuple[tuple[str, int], ...]
    degree: int
    ramification: Divisor

    @cached_property
    def m(self) -> dict[str, int]:
        return dict(self.local_degrees)

    @property
    def non_degenerate(self) -> bool:
        return all(m >= 1 for _, m in self.local_degrees)


@dataclass(frozen=True)
class PseudoHarmonicFailure:
    """Why a morphism is not pseudo-harmonic."""

    reason: str
    vertex: str | None = None
    target_edges: tuple[str, ...] = ()
    sums: tuple[int, ...] = ()

    def __str__(self) -> str:
        where = f" at {self.vertex}" if self.vertex else ""
        detail = ", ".join(f"{e}={s}" for e, s in zip(self.target_edges, self.sums))
        return f"{self.reason}{where}" + (f" ({detail})" if detail else "")


@dataclass(frozen=True)
class HarmonicCheck:
    harmonic: bool
    slack: tuple[tuple[str, int], ...]


def local_sums(phi: IndexedMorphism, v: str) -> dict[str, int]:
    """For each target edge at the image of ``v``, the index sum of its preimages at ``v``."""
    sums = {e.id: 0 for e in phi.target.incidence[phi(v)]}
    for e in phi.source.incidence[v]:
        image = phi.edge_map[e.id]
        if not image.contracted:
            sums[image.target] += image.index
    return sums


def check_pseudo_harmonic(phi: IndexedMorphism) -> HarmonicCertificate | PseudoHarmonicFailure:
    """Compute the local degrees and the degree, or report the first imbalance."""
    require_valid_morphism(phi)
    local: dict[str, int] = {}
    for v in phi.source.vertices:
        sums = local_sums(phi, v)
        if not sums:
            if v not in phi.prescribed:
                return PseudoHarmonicFailure("local degree not prescribed over an edgeless target", v)
            local[v] = phi.prescribed[v]
            continue
        values = list(sums.values())
        if len(set(values)) > 1:
            edges = list(sums)
            j = next(i for i, s in enumerate(values) if s != values[0])
            return PseudoHarmonicFailure(
                "unbalanced index sums", v, (edges[0], edges[j]), (values[0], values[j])
            )
        local[v] = values[0]
    over_edges: dict[str, int] = {e.id: 0 for e in phi.target.edges}
    for edge_id, image in phi.edge_images:
        if not image.contracted:
            over_edges[image.target] += image.index
    over_vertices: dict[str, int] = defaultdict(int)
    for u in phi.target.vertices:
        over_vertices[u] = sum(local[v] for v in phi.fiber(u))
    fibers = {**{f"edge {k}": s for k, s in over_edges.items()}, **{f"vertex {k}": s for k, s in over_vertices.items()}}
    if len(set(fibers.values())) > 1:
        names = list(fibers)
        j = next(i for i, s in enumerate(fibers.values()) if s != fibers[names[0]])
        return PseudoHarmonicFailure("fiber sums differ", None, (names[0], names[j]), (fibers[names[0]], fibers[names[j]]))
    degree = next(iter(fibers.values()))
    if degree < 1:
        return PseudoHarmonicFailure("degree is zero")
    local_degrees = tuple((v, local[v]) for v in phi.source.vertices)
    return HarmonicCertificate(local_degrees, degree, _ramification(phi, local))


def certify(phi: IndexedMorphism) -> HarmonicCertificate:
    """Return the certificate of a pseudo-harmonic morphism.

    Raises:
        PreconditionError: If ``phi`` is not pseudo-harmonic.
    """
    result = check_pseudo_harmonic(phi)
    if isinstance(result, PseudoHarmonicFailure):
        raise PreconditionError(f"morphism is not pseudo-harmonic: {result}")
    return result


def _ramification(phi: IndexedMorphism, local: dict[str, int]) -> Divisor:
    coeffs = {}
    for v, w in phi.source.vertex_weights:
        m = local[v]
        excess = sum(phi.index(e.id) - 1 for e in phi.source.incidence[v])
        coeffs[v] = 2 * (m - 1 + w - m * phi.target.weights[phi(v)]) - excess
    return Divisor.on(phi.source, coeffs)


def ramification_divisor(phi: IndexedMorphism) -> Divisor:
    """``R(v) = 2(m - 1 + w(v) - m w'(phi(v))) - sum over edges at v of (r - 1)``."""
    return certify(phi).ramification


def check_harmonic(phi: IndexedMorphism) -> HarmonicCheck:
    """Harmonic iff the slack of the Riemann-Hurwitz inequality is non-negative everywhere.

    The slack at a vertex is its ramification coefficient.
    """
    slack = certify(phi).ramification.coefficients
    return HarmonicCheck(all(s >= 0 for _, s in slack), slack)


def pullback(phi: IndexedMorphism, divisor: Divisor) -> Divisor:
    """``phi^* u = sum of m(v) v over the fiber of u``, extended linearly."""
    m = certify(phi).m
    target = Divisor.on(phi.target, divisor.as_dict)
    return Divisor.on(phi.source, {v: m[v] * target[phi(v)] for v in phi.source.vertices})


def riemann_hurwitz_degrees(phi: IndexedMorphism) -> tuple[int, int, int]:
    """``(2g - 2, deg phi (2g' - 2), deg R)``; the first equals the sum of the others."""
    cert = certify(phi)
    return (
        2 * genus(phi.source) - 2,
        cert.degree * (2 * genus(phi.target) - 2),
        cert.ramification.degree,
    )


def riemann_hurwitz_holds(phi: IndexedMorphism) -> bool:
    """``K = phi^* K' + R`` coefficientwise."""
    return canonical_divisor(phi.source) == pullback(phi, canonical_divisor(phi.target)) + ramification_divisor(phi)


def vertex_partition_set(phi: IndexedMorphism, v: str) -> PartitionSet:
    """Per target edge at ``phi(v)``, the indices of its preimages at ``v``.

    Raises:
        PreconditionError: If ``v`` is degenerate.
    """
    m = certify(phi).m[v]
    if m < 1:
        raise PreconditionError(f"vertex {v!r} is degenerate")
    parts: dict[str, list[int]] = {e.id: [] for e in phi.target.incidence[phi(v)]}
    for e in phi.source.incidence[v]:
        image = phi.edge_map[e.id]
        if not image.contracted:
            parts[image.target].append(image.index)
    return PartitionSet.of(m, parts.values())
