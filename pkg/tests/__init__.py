"""Tests for HexHarmonic."""
