"""Named graphs shipped with the package."""

from collections.abc import Callable

from .core import WeightedGraph


def banana(n: int, w1: int = 0, w2: int = 0) -> WeightedGraph:
    """Two vertices ``v1`` and ``v2`` joined by ``n`` parallel edges."""
    return WeightedGraph.from_edges({"v1": w1, "v2": w2}, [("v1", "v2")] * n)


def theta() -> WeightedGraph:
    return banana(3)


def path(n: int) -> WeightedGraph:
    """Weightless path on ``u1`` .. ``un``."""
    names = [f"u{i}" for i in range(1, n + 1)]
    return WeightedGraph.from_edges(names, list(zip(names, names[1:])))


def trigonal_chain() -> WeightedGraph:
    """Genus 5 chain with 3, 2 and 3 parallel edges.

    It admits a degree-3 harmonic morphism to a path but carries no
    degree-3 divisor of rank 1.
    """
    edges = (
        [("v1", "v2")] * 3
        + [("v2", "v3")] * 2
        + [("v3", "v4")] * 3
    )
    return WeightedGraph.from_edges(["v1", "v2", "v3", "v4"], edges)


def divisorial_trigonal() -> WeightedGraph:
    """Genus 5 graph with a rank-1 degree-3 divisor but no degree-3 morphism to a tree."""
    edges = {f"a{i}": ("v1", "v2") for i in range(1, 4)}
    edges |= {"e0": ("v2", "v3"), "e2": ("v2", "v0"), "e3": ("v0", "v3")}
    edges |= {f"b{i}": ("v3", "v4") for i in range(1, 4)}
    return WeightedGraph.from_edges(["v0", "v1", "v2", "v3", "v4"], edges)


def spider(leaf_loops: bool = False) -> WeightedGraph:
    """Weight-zero center ``c`` with bridges to three weight-1 leaves.

    With ``leaf_loops`` every leaf also carries a loop, which makes the
    graph stable.
    """
    leaves = ["l1", "l2", "l3"]
    edges = {f"s{i}": ("c", leaf) for i, leaf in enumerate(leaves, start=1)}
    if leaf_loops:
        edges |= {f"o{i}": (leaf, leaf) for i, leaf in enumerate(leaves, start=1)}
    return WeightedGraph.from_edges({"c": 0} | {leaf: 1 for leaf in leaves}, edges)


FIXTURES: dict[str, Callable[[], WeightedGraph]] = {
    "banana2": lambda: banana(2),
    "banana2-weighted": lambda: banana(2, 0, 1),
    "theta": theta,
    "theta-weighted": lambda: banana(3, 0, 1),
    "trigonal-chain": trigonal_chain,
    "divisorial-trigonal": divisorial_trigonal,
    "spider": spider,
    "stable-spider": lambda: spider(leaf_loops=True),
}


def fixture(name: str) -> WeightedGraph:
    """Return the named fixture graph.

    Raises:
        KeyError: If ``name`` is not a fixture.
    """
    return FIXTURES[name]()
