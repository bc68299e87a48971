"""Laplacian, Jacobian order and an exhaustive rank oracle."""

import logging
from functools import lru_cache

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ..graph import WeightedGraph, weightless_model
from .divisor import Divisor, transport

log = logging.getLogger(__name__)


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Integer Laplacian of a loop-free graph in canonical vertex order."""
    index = {v: i for i, v in enumerate(g.vertices)}
    lap = np.zeros((len(index), len(index)), dtype=np.int64)
    for e in g.edges:
        if e.is_loop:
            continue
        a, b = index[e.ends[0]], index[e.ends[1]]
        lap[a, a] += 1
        lap[b, b] += 1
        lap[a, b] -= 1
        lap[b, a] -= 1
    return lap


def reduced_laplacian(g: WeightedGraph) -> Matrix:
    """Laplacian of the weightless model with the first row and column removed."""
    lap = laplacian(weightless_model(g))
    return Matrix(lap[1:, 1:].tolist())


def jacobian_order(g: WeightedGraph) -> int:
    """Number of spanning trees of the weightless model (matrix-tree theorem)."""
    reduced = reduced_laplacian(g)
    if reduced.rows == 0:
        return 1
    return int(reduced.det(method="bareiss"))


def smith_invariants(g: WeightedGraph) -> list[int]:
    """Diagonal of the Smith normal form of the reduced Laplacian."""
    reduced = reduced_laplacian(g)
    if reduced.rows == 0:
        return []
    snf = smith_normal_form(reduced, domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(snf.rows)]


class ClassKeys:
    """Exact class invariants from the adjugate of the reduced Laplacian.

    Two divisors of equal degree are equivalent iff ``adj(L) x`` agrees
    modulo ``det(L)`` where ``x`` is their difference off the first vertex.
    This uses no chip-firing, which makes it an independent oracle.
    """

    def __init__(self, g: WeightedGraph) -> None:
        model = weightless_model(g)
        self.graph = g
        self.vertices = model.vertices
        reduced = Matrix(laplacian(model)[1:, 1:].tolist())
        self.order = 1 if reduced.rows == 0 else int(reduced.det(method="bareiss"))
        if reduced.rows == 0:
            self.columns: list[tuple[int, ...]] = [()]
        else:
            adj = reduced.adjugate(method="bareiss")
            zero = tuple(0 for _ in range(reduced.rows))
            self.columns = [zero] + [
                tuple(int(adj[i, j]) % self.order for i in range(reduced.rows))
                for j in range(reduced.cols)
            ]

    def add(self, key: tuple[int, ...], other: tuple[int, ...], sign: int = 1) -> tuple[int, ...]:
        return tuple((a + sign * b) % self.order for a, b in zip(key, other))

    def key(self, values: tuple[int, ...]) -> tuple[int, ...]:
        result = self.columns[0]
        for column, count in zip(self.columns, values):
            if count:
                result = tuple((a + count * b) % self.order for a, b in zip(result, column))
        return result

    def effective(self, degree: int) -> list[set[tuple[int, ...]]]:
        """Keys of effective classes for every degree up to ``degree``."""
        levels = [{self.columns[0]}]
        for _ in range(degree):
            levels.append({self.add(k, c) for k in levels[-1] for c in self.columns})
        return levels


@lru_cache(maxsize=64)
def class_keys(g: WeightedGraph) -> ClassKeys:
    return ClassKeys(g)


def brute_force_rank(g: WeightedGraph, divisor: Divisor) -> int:
    """Rank by exhaustive search over effective classes, without shortcuts.

    ``r(D) >= k`` iff for every effective class ``[E]`` of degree ``k`` the
    class ``[D - E]`` contains an effective divisor.
    """
    keys = class_keys(g)
    values = transport(g, divisor, "weightless").values
    degree = sum(values)
    if degree < 0:
        return -1
    target = keys.key(values)
    levels = keys.effective(degree)
    for k in range(degree + 1):
        if any(keys.add(target, e, -1) not in levels[degree - k] for e in levels[k]):
            return k - 1
    return degree
