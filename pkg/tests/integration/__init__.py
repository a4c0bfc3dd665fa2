"""Integration tests for floerwidth."""
