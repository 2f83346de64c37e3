"""Tests for lpcc-core."""
