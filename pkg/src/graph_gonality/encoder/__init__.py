"""Report serialization."""

from .report import ReportEncoder, canonical_json, to_payload

__all__ = ["ReportEncoder", "canonical_json", "to_payload"]
