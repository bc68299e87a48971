"""Canonical JSON reports for command results."""

import dataclasses
import hashlib
import json
import sys
import time
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from ..data import graph_to_json, morphism_to_json
from ..divisors import Divisor
from ..graph import WeightedGraph
from ..hurwitz import HurwitzWitness, PartitionSet
from ..hyperelliptic import GraphInvolution
from ..morphism import IndexedMorphism


def canonical_json(value: Any) -> str:
    """Sorted keys, two-space indent, UTF-8 text and a trailing newline."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_payload(value: Any) -> Any:
    """Convert library values into plain JSON data."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, WeightedGraph):
        return graph_to_json(value)
    if isinstance(value, Divisor):
        return value.as_dict
    if isinstance(value, IndexedMorphism):
        return morphism_to_json(value)
    if isinstance(value, PartitionSet):
        return value.to_json()
    if isinstance(value, HurwitzWitness):
        return {"degree": value.degree, "cycles": value.cycle_notation()}
    if isinstance(value, GraphInvolution):
        return {
            "vertex_map": value.vertex_map,
            "edge_map": value.edge_map,
            "inverted": list(value.inverted),
        }
    if dataclasses.is_dataclass(value):
        return {
            f.name: to_payload(getattr(value, f.name))
            for f in dataclasses.fields(value)
            if not f.name.startswith("_")
        }
    if isinstance(value, Mapping):
        return {str(k): to_payload(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_payload(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


class ReportEncoder:
    """Collects the sections of one command's report and writes them out."""

    def __init__(self, command: str, arguments: Mapping[str, Any], timing: bool = False) -> None:
        """Initialize the encoder.

        Args:
            command: Subcommand name, echoed in the report.
            arguments: The parsed options, echoed in the report.
            timing: Add wall-clock time; reports are then no longer
                byte-stable.
        """
        self.command = command
        self.arguments = {k: to_payload(v) for k, v in arguments.items()}
        self.timing = timing
        self.inputs: dict[str, Any] = {}
        self.sections: dict[str, Any] = {}
        self._started = time.perf_counter()

    def add_input(self, name: str, value: Any) -> None:
        """Record a parsed input; inputs feed the digest."""
        self.inputs[name] = to_payload(value)

    def add(self, name: str, value: Any) -> None:
        self.sections[name] = to_payload(value)

    @property
    def digest(self) -> str:
        return hashlib.sha256(canonical_json(self.inputs).encode("utf-8")).hexdigest()

    def render(self) -> str:
        report: dict[str, Any] = {
            "command": self.command,
            "arguments": self.arguments,
            "input_digest": self.digest,
            **self.sections,
        }
        if self.timing:
            report["elapsed_ms"] = round((time.perf_counter() - self._started) * 1000)
        return canonical_json(report)

    def save(self, output_path: str | Path | None = None) -> Path | None:
        """Write the report to ``output_path``, or to stdout when None.

        Returns:
            The path written, or None for stdout.
        """
        text = self.render()
        if output_path is None:
            sys.stdout.write(text)
            return None
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(text, encoding="utf-8")
        return output_path

    def clear(self) -> None:
        """Drop every recorded input and section."""
        self.inputs.clear()
        self.sections.clear()

    @property
    def section_count(self) -> int:
        return len(self.sections)
