"""Tests for lpcc-bicriteria."""
