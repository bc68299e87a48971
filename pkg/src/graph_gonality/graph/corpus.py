"""Random graphs and exhaustive enumeration of small stable graphs."""

import itertools
import random
from collections.abc import Iterator

import networkx as nx

from .core import WeightedGraph
from .isomorphism import are_isomorphic, invariant_key


def random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 9,
    max_weight: int = 2,
    loops: bool = True,
    min_vertices: int = 1,
) -> WeightedGraph:
    """Draw a connected weighted multigraph.

    A random spanning tree is completed with extra edges (parallel edges and,
    when ``loops`` is set, loops) up to a random total of at most
    ``max_edges``.
    """
    n = rng.randint(min_vertices, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    pairs = [(names[rng.randrange(i)], names[i]) for i in range(1, n)]
    total = rng.randint(len(pairs), max(len(pairs), max_edges))
    if n == 1 and not loops:
        total = 0
    while len(pairs) < total:
        a, b = rng.choice(names), rng.choice(names)
        if a == b and not loops:
            continue
        pairs.append((a, b))
    weights = {v: rng.randint(0, max_weight) for v in names}
    return WeightedGraph.from_edges(weights, pairs)


def stable_graphs(genus: int, num_vertices: int, loopless: bool = False) -> Iterator[WeightedGraph]:
    """Yield every stable graph of the given genus and vertex count once.

    Every such graph is an atlas graph (its simple underlying graph) plus
    extra parallel edges, loops and weights. Atlas graphs are pairwise
    non-isomorphic, so duplicates only arise inside one atlas graph.
    """
    names = [f"v{i}" for i in range(1, num_vertices + 1)]
    for simple in nx.graph_atlas_g():
        if simple.number_of_nodes() != num_vertices or not nx.is_connected(simple):
            continue
        base_edges = sorted(tuple(sorted(e)) for e in simple.edges())
        budget = genus - (len(base_edges) - num_vertices + 1)
        if budget < 0:
            continue
        slots: list[tuple[str, object]] = [("edge", e) for e in base_edges]
        if not loopless:
            slots += [("loop", v) for v in range(num_vertices)]
        slots += [("weight", v) for v in range(num_vertices)]
        seen: dict[tuple, list[WeightedGraph]] = {}
        for combo in itertools.combinations_with_replacement(range(len(slots)), budget):
            weights = [0] * num_vertices
            valency = [simple.degree(v) for v in range(num_vertices)]
            edges = [(names[a], names[b]) for a, b in base_edges]
            for index in combo:
                kind, item = slots[index]
                if kind == "edge":
                    a, b = item
                    edges.append((names[a], names[b]))
                    valency[a] += 1
                    valency[b] += 1
                elif kind == "loop":
                    edges.append((names[item], names[item]))
                    valency[item] += 2
                else:
                    weights[item] += 1
            if any(w + val < 3 for w, val in zip(weights, valency)):
                continue
            g = WeightedGraph.from_edges(dict(zip(names, weights)), edges)
            bucket = seen.setdefault(invariant_key(g), [])
            if any(are_isomorphic(g, other) for other in bucket):
                continue
            bucket.append(g)
            yield g
