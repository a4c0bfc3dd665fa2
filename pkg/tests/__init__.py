"""floerwidth test suite."""
