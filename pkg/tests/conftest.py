"""Shared fixtures."""

from pathlib import Path

import pytest

from graph_gonality.config import Config

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def rng():
    """Seeded generator for the randomized suites."""
    return Config(seed="graph-gonality-tests").get_rng()
