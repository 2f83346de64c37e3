"""Tests for lpcc-corpus."""
