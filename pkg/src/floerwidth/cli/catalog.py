"""Catalog ingestion and verification commands."""

from __future__ import annotations

from pathlib import Path

import click
from rich.table import Table

from floerwidth.catalog.loader import CatalogLoader
from floerwidth.catalog.records import compute_record
from floerwidth.cli.common import (
    EXIT_INPUT_ERROR,
    EXIT_INVARIANT_VIOLATION,
    active_catalog,
    cache_from,
    console,
    echo_json,
    err_console,
    handle_errors,
)
from floerwidth.core.config import get_settings
from floerwidth.core.types import CheckName
from floerwidth.diagram.parser import canonical_form
from floerwidth.verify.runner import VerificationRunner


def _parse_checks(value: str | None) -> list[CheckName]:
    if not value:
        return list(CheckName)
    known = {check.value: check for check in CheckName}
    selected: list[CheckName] = []
    for name in (part.strip() for part in value.split(",")):
        if not name:
            continue
        if name not in known:
            raise click.BadParameter(
                f"unknown check {name!r}; choose from {', '.join(sorted(known))}",
                param_hint="--checks",
            )
        if known[name] not in selected:
            selected.append(known[name])
    return selected


@click.command("ingest")
@click.argument(
    "file", required=False, type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option("--compute/--no-compute", default=True, help="Append result records for new entries")
@click.pass_context
@handle_errors
def ingest(ctx: click.Context, file: Path | None, compute: bool) -> None:
    """Validate a CSV/JSON catalog (the bundled one by default) into the cache."""
    loader = CatalogLoader()
    result = loader.load_file(file) if file else loader.load_bundled()
    for rejected in result.rejected:
        err_console.print(
            f"[red]✗[/red] row {rejected.row} ({rejected.name or '?'}): {rejected.reason}"
        )
    if not len(result.catalog):
        err_console.print("[red]✗[/red] No valid catalog entries")
        raise SystemExit(EXIT_INPUT_ERROR)

    cache = cache_from(ctx)
    path = cache.save_catalog(result.catalog, loader)
    console.print(
        f"[green]✓[/green] Ingested {len(result.catalog)} entries "
        f"({len(result.rejected)} rejected) into {path}"
    )
    if not compute:
        return

    known = cache.canonical_forms()
    added = 0
    for entry in result.catalog.entries:
        diagram = entry.diagram()
        if canonical_form(diagram) in known:
            continue
        if cache.append(compute_record(diagram, name=entry.name)):
            added += 1
    console.print(
        f"[green]✓[/green] Appended {added} new result records to {cache.results_path}"
    )


@click.command("verify")
@click.argument(
    "file", required=False, type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option("--checks", help="Comma-separated checks (all by default)")
@click.option("--workers", type=click.IntRange(min=1), help="Process pool size")
@click.option("--max-crossings", type=click.IntRange(min=0), help="Skip larger diagrams")
@click.option("--json", "as_json", is_flag=True, help="Print the summary as JSON")
@click.pass_context
@handle_errors
def verify(
    ctx: click.Context,
    file: Path | None,
    checks: str | None,
    workers: int | None,
    max_crossings: int | None,
    as_json: bool,
) -> None:
    """Run theorem checks over a catalog; exits 0 only if every case passes."""
    selected = _parse_checks(checks)
    if file:
        result = CatalogLoader().load_file(file)
        for rejected in result.rejected:
            err_console.print(
                f"[yellow]![/yellow] skipping row {rejected.row} "
                f"({rejected.name or '?'}): {rejected.reason}"
            )
        catalog = result.catalog
    else:
        catalog = active_catalog(ctx)
    if max_crossings is not None:
        catalog = catalog.model_copy(update={"entries": tuple(catalog.filter(max_crossings))})

    settings = get_settings().verify
    if workers is not None:
        settings = settings.model_copy(update={"workers": workers})
    summary = VerificationRunner(selected, settings).run(catalog)

    if as_json:
        echo_json(summary.to_json_dict())
    else:
        view = Table(title=f"Verification of {summary.entries} entries")
        view.add_column("Check", style="cyan")
        view.add_column("Passed", justify="right")
        view.add_column("Failed", justify="right")
        for check, tally in summary.tallies().items():
            failed = f"[red]{tally.failed}[/red]" if tally.failed else "0"
            view.add_row(check.value, str(tally.passed), failed)
        console.print(view)
        for failure in summary.failures:
            site = "" if failure.site is None else f" at {failure.site}"
            err_console.print(
                f"[red]✗[/red] {failure.check.value} {failure.entry or ''}{site}: "
                f"{failure.message}\n  {failure.pd}"
            )

    if not summary.passed:
        raise SystemExit(EXIT_INVARIANT_VIOLATION)
    if not as_json:
        console.print("[green]✓[/green] All checks passed")
