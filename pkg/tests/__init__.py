"""Tests for graph-gonality."""
