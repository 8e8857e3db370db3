"""Tests for observability utilities."""
