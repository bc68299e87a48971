"""Random pseudo-harmonic morphisms onto trees."""

import random

from ..graph import WeightedGraph, validate
from .indexed import IndexedMorphism


def random_tree(rng: random.Random, size: int, max_weight: int = 0) -> WeightedGraph:
    names = [f"u{i}" for i in range(1, size + 1)]
    edges = [(names[rng.randrange(i)], names[i]) for i in range(1, size)]
    return WeightedGraph.from_edges({u: rng.randint(0, max_weight) for u in names}, edges)


def random_pseudo_harmonic(
    rng: random.Random,
    max_target: int = 4,
    max_degree: int = 3,
    max_weight: int = 1,
    target_weight: int = 0,
    simple: bool = False,
    contracted: int = 2,
) -> IndexedMorphism:
    """Draw a non-degenerate pseudo-harmonic morphism to a tree with at least two vertices.

    Every fiber splits the degree into local degrees; over each target edge
    the two fibers are joined greedily by edges whose indices use up the
    local degrees on both sides. Up to ``contracted`` extra edges are added
    inside fibers. Draws with a disconnected source are repeated.

    Args:
        simple: Use index 1 on every edge.
    """
    while True:
        phi = _draw(rng, max_target, max_degree, max_weight, target_weight, simple, contracted)
        if phi is not None:
            return phi


def _draw(
    rng: random.Random,
    max_target: int,
    max_degree: int,
    max_weight: int,
    target_weight: int,
    simple: bool,
    contracted: int,
) -> IndexedMorphism | None:
    target = random_tree(rng, rng.randint(2, max_target), target_weight)
    degree = rng.randint(1, max_degree)
    local: dict[str, int] = {}
    vertex_map: dict[str, str] = {}
    fibers: dict[str, list[str]] = {}
    for u in target.vertices:
        parts = rng.randint(1, degree)
        cuts = sorted(rng.sample(range(1, degree), parts - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        fibers[u] = [f"{u}.{i}" for i in range(len(sizes))]
        for v, m in zip(fibers[u], sizes):
            local[v] = m
            vertex_map[v] = u
    edges: dict[str, tuple[str, str]] = {}
    images: dict[str, tuple[str | None, int]] = {}
    for e in target.edges:
        a, b = e.ends
        left = {v: local[v] for v in fibers[a]}
        right = {v: local[v] for v in fibers[b]}
        count = 0
        while any(left.values()):
            x = rng.choice([v for v, r in left.items() if r])
            y = rng.choice([v for v, r in right.items() if r])
            index = 1 if simple else rng.randint(1, min(left[x], right[y]))
            left[x] -= index
            right[y] -= index
            count += 1
            edges[f"{e.id}.{count}"] = (x, y)
            images[f"{e.id}.{count}"] = (e.id, index)
    for i in range(rng.randint(0, contracted)):
        u = rng.choice(target.vertices)
        if len(fibers[u]) < 2:
            continue
        x, y = rng.sample(fibers[u], 2)
        edges[f"c{i}"] = (x, y)
        images[f"c{i}"] = (None, 0)
    weights = {v: rng.randint(0, max_weight) for v in vertex_map}
    source = WeightedGraph.from_edges(weights, edges)
    if validate(source):
        return None
    return IndexedMorphism.build(source, target, vertex_map, images)
