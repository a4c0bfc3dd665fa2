"""End-to-end tests for floerwidth."""
