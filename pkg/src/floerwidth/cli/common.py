"""Helpers shared by the CLI commands."""

from __future__ import annotations

import functools
import json
from collections.abc import Callable
from typing import Any, TypeVar

import click
from rich.console import Console

from floerwidth.catalog.cache import ResultCache
from floerwidth.catalog.loader import CatalogLoader
from floerwidth.catalog.models import Catalog
from floerwidth.core.exceptions import FloerWidthError, InvariantViolationError
from floerwidth.diagram.model import LinkDiagram
from floerwidth.diagram.parser import parse_pd

console = Console()
err_console = Console(stderr=True)

EXIT_INPUT_ERROR = 2
EXIT_INVARIANT_VIOLATION = 3

F = TypeVar("F", bound=Callable[..., Any])


def echo_json(data: Any) -> None:
    """Key-sorted JSON on stdout."""
    click.echo(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))


def handle_errors(func: F) -> F:
    """Map library errors to the exit code contract: 2 for bad input, 3 for cross-check failures."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except InvariantViolationError as e:
            err_console.print(f"[red]✗[/red] Invariant violation ({e.check}): {e.message}")
            click.echo(
                json.dumps(
                    {"check": e.check, "message": e.message, "reproduction": e.reproduction},
                    indent=2,
                    sort_keys=True,
                    default=str,
                ),
                err=True,
            )
            raise SystemExit(EXIT_INVARIANT_VIOLATION) from e
        except FloerWidthError as e:
            err_console.print(f"[red]✗[/red] {e}")
            raise SystemExit(EXIT_INPUT_ERROR) from e

    return wrapper  # type: ignore[return-value]


def cache_from(ctx: click.Context) -> ResultCache:
    return ResultCache(ctx.obj.get("cache_dir"))


def active_catalog(ctx: click.Context) -> Catalog:
    """The ingested catalog of the cache directory, else the bundled one."""
    cache = cache_from(ctx)
    if cache.catalog_path.exists():
        return cache.load_catalog()
    return CatalogLoader().load_bundled().catalog


def resolve_diagram(ctx: click.Context, text: str) -> tuple[LinkDiagram, str | None]:
    """A catalog name or diagram notation, as (diagram, catalog name or None)."""
    name = text.strip()
    if "[" in name or name == "U":
        return parse_pd(text), None
    entry = active_catalog(ctx).find(name)
    if entry is not None:
        return entry.diagram(), entry.name
    return parse_pd(text), None

