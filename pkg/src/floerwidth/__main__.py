"""CLI entry point for floerwidth."""

from floerwidth.cli.main import cli

if __name__ == "__main__":
    cli()
