"""Graph gonality - divisor rank, harmonic morphisms and gonality of weighted multigraphs."""

__version__ = "0.1.0"

from .config import Config
from .divisors import Divisor, divisorial_gonality, is_divisorially_gonal, rank
from .errors import GonalityError
from .gonality import find_harmonic_to_tree, geometric_gonality, is_geometrically_gonal
from .graph import WeightedGraph, genus
from .hurwitz import PartitionSet, is_hurwitz_type
from .hyperelliptic import is_hyperelliptic, stable_curve_hyperelliptic_locus

__all__ = [
    "Config",
    "Divisor",
    "GonalityError",
    "PartitionSet",
    "WeightedGraph",
    "__version__",
    "divisorial_gonality",
    "find_harmonic_to_tree",
    "genus",
    "geometric_gonality",
    "is_divisorially_gonal",
    "is_geometrically_gonal",
    "is_hurwitz_type",
    "is_hyperelliptic",
    "rank",
    "stable_curve_hyperelliptic_locus",
]
