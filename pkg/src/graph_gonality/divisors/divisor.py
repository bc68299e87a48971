"""Divisors on weighted graphs."""

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from ..errors import PreconditionError, UnknownVertexError
from ..graph import WeightedGraph, edge_valency, loopless_model, weightless_model

Model = Literal["loopless", "weightless"]


@dataclass(frozen=True)
class Divisor:
    """An integer chip count on every vertex of one graph.

    ``coefficients`` lists every vertex of the graph in canonical order,
    including zero entries, so two divisors over the same graph compare
    equal exactly when they agree everywhere.
    """

    coefficients: tuple[tuple[str, int], ...]

    @classmethod
    def on(cls, g: WeightedGraph, coeffs: Mapping[str, int] | None = None) -> "Divisor":
        """Build a divisor over ``g``; vertices missing from ``coeffs`` get 0.

        Raises:
            UnknownVertexError: If ``coeffs`` names a vertex outside ``g``.
        """
        coeffs = dict(coeffs or {})
        unknown = set(coeffs) - set(g.vertices)
        if unknown:
            raise UnknownVertexError(f"divisor references unknown vertices: {sorted(unknown)}")
        return cls(tuple((v, int(coeffs.get(v, 0))) for v in g.vertices))

    @classmethod
    def zero(cls, g: WeightedGraph) -> "Divisor":
        return cls.on(g)

    @classmethod
    def point(cls, g: WeightedGraph, v: str, k: int = 1) -> "Divisor":
        return cls.on(g, {v: k})

    @classmethod
    def from_values(cls, vertices: tuple[str, ...], values: tuple[int, ...]) -> "Divisor":
        return cls(tuple(zip(vertices, values)))

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coefficients)

    @cached_property
    def values(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.coefficients)

    @cached_property
    def as_dict(self) -> dict[str, int]:
        return dict(self.coefficients)

    def __getitem__(self, v: str) -> int:
        try:
            return self.as_dict[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    @property
    def degree(self) -> int:
        return sum(self.values)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.values)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(v for v, c in self.coefficients if c)

    def _check(self, other: "Divisor") -> None:
        if self.vertices != other.vertices:
            raise PreconditionError("divisors live on different vertex sets")

    def __add__(self, other: "Divisor") -> "Divisor":
        self._check(other)
        return Divisor.from_values(self.vertices, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._check(other)
        return Divisor.from_values(self.vertices, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Divisor":
        return Divisor.from_values(self.vertices, tuple(-a for a in self.values))

    def __mul__(self, k: int) -> "Divisor":
        return Divisor.from_values(self.vertices, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"{c}*{v}" if c != 1 else v for v, c in self.coefficients if c]
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class PicardClass:
    """A linear equivalence class, stored as its reduced representative."""

    representative: Divisor
    base: str

    @property
    def degree(self) -> int:
        return self.representative.degree


def canonical_divisor(g: WeightedGraph) -> Divisor:
    """K(v) = 2w(v) - 2 + val(v), with val counting edges only.

    Legs are marked points and stay out of the divisor theory, so the
    degree is always ``2 * genus - 2``.
    """
    return Divisor.on(g, {v: 2 * w - 2 + edge_valency(g, v) for v, w in g.vertex_weights})


def model_graph(g: WeightedGraph, model: Model) -> WeightedGraph:
    if model == "loopless":
        return loopless_model(g)
    if model == "weightless":
        return weightless_model(g)
    raise PreconditionError(f"unknown model {model!r}")


def transport(g: WeightedGraph, divisor: Divisor, model: Model = "weightless") -> Divisor:
    """Carry a divisor on ``g`` to its loopless or weightless model.

    Original vertices keep their coefficients; inserted vertices get 0.
    """
    target = model_graph(g, model)
    if divisor.vertices == target.vertices:
        return divisor
    return Divisor.on(target, divisor.as_dict)
