"""Configuration shared by the decision procedures."""

from dataclasses import dataclass, field
import hashlib
import random


@dataclass
class Config:
    """Tunable limits and determinism settings."""

    # Divisor classes
    enumeration_cap: int = 10**6  # max classes enumerated per degree

    # Hurwitz solver
    hurwitz_degree_cap: int = 8

    # Gonality search
    node_budget: int = 2_000_000
    refinement_max_subdiv: int = 2

    # Determinism
    seed: int | str | None = None

    # Internal
    _rng: random.Random = field(default_factory=random.Random, repr=False)

    def __post_init__(self) -> None:
        """Seed the generator; string seeds are hashed with sha256 first."""
        seed = self.seed
        if isinstance(seed, str):
            seed = int(hashlib.sha256(seed.encode()).hexdigest(), 16) % (2**32)
        self._rng = random.Random(seed)

    def get_rng(self) -> random.Random:
        """The generator used by the random corpus and the ``--random`` fixture."""
        return self._rng


DEFAULT_CONFIG = Config()


def resolve(config: "Config | None") -> Config:
    """Return ``config`` or the shared defaults."""
    return DEFAULT_CONFIG if config is None else config
