"""CLI module for floerwidth."""

from floerwidth.cli.main import cli

__all__ = ["cli"]
