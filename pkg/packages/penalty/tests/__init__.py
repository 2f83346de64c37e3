"""Tests for lpcc-penalty."""
