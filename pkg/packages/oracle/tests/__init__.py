"""Tests for lpcc-oracle."""
