"""JSON codec for graphs, divisors, morphisms and partition sets.

Graph format::

    {
        "vertices": [{"id": "v1", "weight": 0}, ...],
        "edges": [{"id": "e1", "ends": ["v1", "v2"]}, ...],
        "legs": [{"id": "l1", "vertex": "v1"}, ...]
    }

Parallel edges are repeated entries and a loop has equal ends. ``legs`` may
be omitted. Divisors are ``{"graph": <path or inline graph>, "coeffs":
{vertex: int}}``, morphisms ``{"source", "target", "vertex_map", "edges":
[{"id", "action": "contract" | target edge, "index"}]}`` and partition sets
``{"d": int, "partitions": [[int, ...], ...]}``.

Every decoding problem raises :class:`InputError` with a JSON path.
"""

import json
from pathlib import Path
from typing import Any

from ..divisors import Divisor
from ..errors import GonalityError, InputError
from ..graph import WeightedGraph, require_valid
from ..hurwitz import PartitionSet
from ..morphism import IndexedMorphism

CONTRACT_ACTION = "contract"


def _expect(value: Any, kind: type | tuple[type, ...], location: str) -> Any:
    # bool is an int subclass; reject it where integers are expected
    if isinstance(value, bool) and kind in (int, (int,)):
        raise InputError("expected an integer, got a boolean", location)
    if not isinstance(value, kind):
        expected = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise InputError(f"expected {expected}, got {type(value).__name__}", location)
    return value


def _field(obj: dict, key: str, kind: type | tuple[type, ...], location: str) -> Any:
    if key not in obj:
        raise InputError(f"missing key {key!r}", location)
    return _expect(obj[key], kind, f"{location}.{key}")


def load_json(file_path: str | Path) -> Any:
    """Read a JSON document.

    Raises:
        InputError: If the file is missing or not valid JSON.
    """
    file_path = Path(file_path)
    try:
        with open(file_path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"no such file: {file_path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"{file_path}:{exc.lineno}:{exc.colno}") from None


# Graphs


def graph_from_json(data: Any, check: bool = True, location: str = "$") -> WeightedGraph:
    """Decode a graph.

    Args:
        data: The decoded JSON object.
        check: Also require the structural invariants (connectivity and so
            on); the ``validate`` command turns this off to report them.
        location: JSON path of ``data`` for error messages.

    Raises:
        InputError: On malformed data or references to unknown vertices.
    """
    obj = _expect(data, dict, location)
    weights: dict[str, int] = {}
    for i, item in enumerate(_field(obj, "vertices", list, location)):
        where = f"{location}.vertices[{i}]"
        vertex = _expect(item, dict, where)
        vid = _field(vertex, "id", str, where)
        weight = _field(vertex, "weight", int, where) if "weight" in vertex else 0
        if vid in weights:
            raise InputError(f"duplicate vertex {vid!r}", f"{where}.id")
        if weight < 0:
            raise InputError(f"negative weight {weight}", f"{where}.weight")
        weights[vid] = weight
    edges: dict[str, tuple[str, str]] = {}
    for i, item in enumerate(_field(obj, "edges", list, location)):
        where = f"{location}.edges[{i}]"
        edge = _expect(item, dict, where)
        eid = _field(edge, "id", str, where)
        ends = _field(edge, "ends", list, where)
        if eid in edges:
            raise InputError(f"duplicate edge {eid!r}", f"{where}.id")
        if len(ends) != 2:
            raise InputError(f"an edge has two ends, got {len(ends)}", f"{where}.ends")
        for j, v in enumerate(ends):
            if _expect(v, str, f"{where}.ends[{j}]") not in weights:
                raise InputError(f"unknown vertex {v!r}", f"{where}.ends[{j}]")
        edges[eid] = (ends[0], ends[1])
    legs: dict[str, str] = {}
    for i, item in enumerate(_expect(obj.get("legs", []), list, f"{location}.legs")):
        where = f"{location}.legs[{i}]"
        leg = _expect(item, dict, where)
        lid = _field(leg, "id", str, where)
        vertex = _field(leg, "vertex", str, where)
        if vertex not in weights:
            raise InputError(f"unknown vertex {vertex!r}", f"{where}.vertex")
        legs[lid] = vertex
    g = WeightedGraph.from_edges(weights, edges, legs)
    if check:
        try:
            require_valid(g)
        except GonalityError as exc:
            raise InputError(str(exc), location) from None
    return g


def graph_to_json(g: WeightedGraph) -> dict:
    return {
        "vertices": [{"id": v, "weight": w} for v, w in g.vertex_weights],
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in g.edges],
        "legs": [{"id": leg, "vertex": v} for leg, v in g.legs],
    }


def _graph_ref(ref: Any, base: Path | None, location: str) -> WeightedGraph:
    """An inline graph object or a path relative to ``base``."""
    if isinstance(ref, str):
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return graph_from_json(load_json(path), location=f"{path}:$")
    return graph_from_json(ref, location=location)


def load_graph(file_path: str | Path, check: bool = True) -> WeightedGraph:
    return graph_from_json(load_json(file_path), check=check)


# Divisors


def divisor_from_json(
    data: Any,
    graph: WeightedGraph | None = None,
    base: Path | None = None,
    location: str = "$",
) -> tuple[WeightedGraph, Divisor]:
    """Decode a divisor and the graph it lives on.

    The ``graph`` key may be omitted when ``graph`` is given; when both are
    present the file's graph wins.

    Raises:
        InputError: On malformed data or unknown vertices.
    """
    obj = _expect(data, dict, location)
    if "graph" in obj:
        graph = _graph_ref(obj["graph"], base, f"{location}.graph")
    if graph is None:
        raise InputError("missing key 'graph' and no graph given", location)
    coeffs = _field(obj, "coeffs", dict, location)
    for v, k in coeffs.items():
        if v not in graph.weights:
            raise InputError(f"unknown vertex {v!r}", f"{location}.coeffs.{v}")
        _expect(k, int, f"{location}.coeffs.{v}")
    return graph, Divisor.on(graph, coeffs)


def divisor_to_json(divisor: Divisor, g: WeightedGraph | None = None) -> dict:
    data: dict[str, Any] = {"coeffs": {v: k for v, k in divisor.coefficients if k}}
    if g is not None:
        data["graph"] = graph_to_json(g)
    return data


def load_divisor(file_path: str | Path, graph: WeightedGraph | None = None) -> tuple[WeightedGraph, Divisor]:
    file_path = Path(file_path)
    return divisor_from_json(load_json(file_path), graph, file_path.parent)


# Morphisms


def morphism_from_json(data: Any, base: Path | None = None, location: str = "$") -> IndexedMorphism:
    """Decode an indexed morphism.

    Raises:
        InputError: On malformed data or a structurally invalid morphism.
    """
    obj = _expect(data, dict, location)
    if "source" not in obj or "target" not in obj:
        raise InputError("a morphism needs 'source' and 'target'", location)
    source = _graph_ref(obj["source"], base, f"{location}.source")
    target = _graph_ref(obj["target"], base, f"{location}.target")
    vertex_map = _field(obj, "vertex_map", dict, location)
    for v, u in vertex_map.items():
        _expect(u, str, f"{location}.vertex_map.{v}")
    images: dict[str, tuple[str | None, int]] = {}
    for i, item in enumerate(_field(obj, "edges", list, location)):
        where = f"{location}.edges[{i}]"
        edge = _expect(item, dict, where)
        eid = _field(edge, "id", str, where)
        action = _field(edge, "action", str, where)
        if action == CONTRACT_ACTION:
            images[eid] = (None, 0)
        else:
            images[eid] = (action, _field(edge, "index", int, where))
    multiplicities = None
    if "multiplicities" in obj:
        multiplicities = _field(obj, "multiplicities", dict, location)
        for v, m in multiplicities.items():
            _expect(m, int, f"{location}.multiplicities.{v}")
    try:
        return IndexedMorphism.build(source, target, vertex_map, images, multiplicities)
    except GonalityError as exc:
        raise InputError(str(exc), location) from None


def morphism_to_json(phi: IndexedMorphism) -> dict:
    edges = []
    for edge_id, image in phi.edge_images:
        if image.contracted:
            edges.append({"id": edge_id, "action": CONTRACT_ACTION})
        else:
            edges.append({"id": edge_id, "action": image.target, "index": image.index})
    data: dict[str, Any] = {
        "source": graph_to_json(phi.source),
        "target": graph_to_json(phi.target),
        "vertex_map": dict(phi.vertex_images),
        "edges": edges,
    }
    if phi.multiplicities:
        data["multiplicities"] = dict(phi.multiplicities)
    return data


def load_morphism(file_path: str | Path) -> IndexedMorphism:
    file_path = Path(file_path)
    return morphism_from_json(load_json(file_path), file_path.parent)


# Partition sets


def partition_set_from_json(data: Any, location: str = "$") -> PartitionSet:
    obj = _expect(data, dict, location)
    degree = _field(obj, "d", int, location)
    partitions = []
    for i, item in enumerate(_field(obj, "partitions", list, location)):
        where = f"{location}.partitions[{i}]"
        parts = _expect(item, list, where)
        for j, part in enumerate(parts):
            _expect(part, int, f"{where}[{j}]")
        partitions.append(parts)
    try:
        return PartitionSet.of(degree, partitions)
    except GonalityError as exc:
        raise InputError(str(exc), f"{location}.partitions") from None


def load_partition_set(file_path: str | Path) -> PartitionSet:
    return partition_set_from_json(load_json(file_path))
