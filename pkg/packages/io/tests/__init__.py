"""Tests for lpcc-io."""
