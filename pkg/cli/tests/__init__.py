"""Tests for lpcc-cli."""
