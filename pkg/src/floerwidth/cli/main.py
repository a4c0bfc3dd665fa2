"""Main CLI entry point."""

from __future__ import annotations

import json
from pathlib import Path

import click
import yaml

from floerwidth import __version__
from floerwidth.core.config import LogLevel, get_settings
from floerwidth.observability.logging import configure_logging


@click.group()
@click.version_option(version=__version__, prog_name="floerwidth")
@click.option(
    "--cache-dir",
    type=click.Path(file_okay=False, path_type=Path),
    envvar="FLOERWIDTH_CACHE_DIR",
    help="Result cache directory [env: FLOERWIDTH_CACHE_DIR]",
)
@click.option(
    "--log-level",
    type=click.Choice([level.value for level in LogLevel], case_sensitive=False),
    help="Log level for stderr diagnostics",
)
@click.pass_context
def cli(ctx: click.Context, cache_dir: Path | None, log_level: str | None) -> None:
    """
    floerwidth - Kauffman-state width and Turaev genus of link diagrams.

    DIAGRAM arguments accept a catalog name (8_19) or diagram notation
    (PD[X(1,1,2,2)], BR[1,1,1], C[2,2], P[3,3,-3], M[[3],[2,1],[2]], U).
    """
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir
    configure_logging(level=log_level)


# Import and register commands
from floerwidth.cli.catalog import ingest, verify  # noqa: E402
from floerwidth.cli.diagrams import export_dot, report, skein, table  # noqa: E402

cli.add_command(report)
cli.add_command(table)
cli.add_command(skein)
cli.add_command(export_dot)
cli.add_command(ingest)
cli.add_command(verify)


@cli.command()
@click.option("--format", "output_format", type=click.Choice(["yaml", "json"]), default="yaml")
def config(output_format: str) -> None:
    """Show the effective configuration."""
    config_dict = get_settings().model_dump(mode="json")
    if output_format == "json":
        click.echo(json.dumps(config_dict, indent=2, sort_keys=True))
    else:
        click.echo(yaml.safe_dump(config_dict, default_flow_style=False), nl=False)


if __name__ == "__main__":
    cli()
