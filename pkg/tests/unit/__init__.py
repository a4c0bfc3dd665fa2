"""Unit tests for floerwidth."""
