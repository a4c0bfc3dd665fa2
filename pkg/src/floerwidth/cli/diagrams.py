"""Per-diagram CLI commands."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click
from rich.table import Table

from floerwidth.catalog.records import compute_record
from floerwidth.cli.common import (
    EXIT_INPUT_ERROR,
    EXIT_INVARIANT_VIOLATION,
    cache_from,
    console,
    echo_json,
    err_console,
    handle_errors,
    resolve_diagram,
)
from floerwidth.core.types import Splicing
from floerwidth.diagram.parser import canonical_form
from floerwidth.export.dot import get_renderer
from floerwidth.skein.normalized import NormalizedInvariants, skein_check, width_via_skein
from floerwidth.states.width import bigrading_table
from floerwidth.tait.graphs import labeled_tait_graphs
from floerwidth.turaev.ribbon import ribbon_graph


def _fmt(value: int | float) -> str:
    return str(int(value)) if float(value).is_integer() else f"{value:g}"


@click.command("report")
@click.argument("diagram")
@click.option("--marked-edge", type=int, help="Arc adjacent to the two marked faces")
@click.option("--no-cache", is_flag=True, help="Neither read nor write the result cache")
@click.pass_context
@handle_errors
def report(ctx: click.Context, diagram: str, marked_edge: int | None, no_cache: bool) -> None:
    """Compute the invariant record of a diagram or catalog entry."""
    parsed, name = resolve_diagram(ctx, diagram)
    use_cache = not no_cache and marked_edge is None
    cache = cache_from(ctx)
    canonical = canonical_form(parsed)

    record = cache.get(canonical) if use_cache else None
    if record is None:
        record = compute_record(parsed, name=name, marked_edge=marked_edge)
        if use_cache:
            cache.append(record)
    elif name is not None and record.name != name:
        record = record.model_copy(update={"name": name})

    echo_json(record.to_json_dict())


@click.command("table")
@click.argument("diagram")
@click.option("--json/--text", "as_json", default=True, help="Output format")
@click.option("--marked-edge", type=int, help="Arc adjacent to the two marked faces")
@click.pass_context
@handle_errors
def table(ctx: click.Context, diagram: str, as_json: bool, marked_edge: int | None) -> None:
    """Count Kauffman states per (Alexander, Maslov) bigrading."""
    parsed, name = resolve_diagram(ctx, diagram)
    if parsed.is_knot and not parsed.crossings:
        err_console.print("[red]✗[/red] no crossings; trivial state by convention A=M=0")
        raise SystemExit(EXIT_INPUT_ERROR)

    grading = bigrading_table(parsed, marked_edge)
    if as_json:
        echo_json(grading.to_json_dict())
        return

    rows, columns, grid = grading.text_grid()
    view = Table(title=f"Kauffman states of {name or canonical_form(parsed)}")
    view.add_column("A \\ M", style="cyan", justify="right")
    for maslov in columns:
        view.add_column(_fmt(maslov), justify="right")
    for alexander, counts in zip(rows, grid, strict=True):
        view.add_row(_fmt(alexander), *(str(n) if n else "" for n in counts))
    console.print(view)
    console.print(
        f"Delta = {_fmt(grading.diagonal_max)}, delta = {_fmt(grading.diagonal_min)}, "
        f"width = {grading.width}, states = {grading.total}"
    )


@click.command("skein")
@click.argument("diagram")
@click.option(
    "--crossing",
    "-c",
    "crossings",
    type=int,
    multiple=True,
    help="Crossing to resolve (repeatable; all crossings by default)",
)
@click.option("--evaluate", is_flag=True, help="Also evaluate the width by skein recursion")
@click.pass_context
@handle_errors
def skein(ctx: click.Context, diagram: str, crossings: tuple[int, ...], evaluate: bool) -> None:
    """Check the skein relations of normalized genus and width."""
    parsed, _ = resolve_diagram(ctx, diagram)
    sites = list(crossings) or list(range(parsed.crossing_count))
    checks = [skein_check(parsed, site) for site in sites]
    invariants = NormalizedInvariants.of(parsed)

    output: dict[str, Any] = {
        "pd": canonical_form(parsed),
        "normalized": invariants.model_dump(),
        "passed": all(check.passed for check in checks),
        "sites": [check.to_json_dict() for check in checks],
    }
    if evaluate:
        output["skein_width"] = width_via_skein(parsed)
    echo_json(output)

    failed = [check.quadruple.site for check in checks if not check.passed]
    if failed or output.get("skein_width", invariants.w_bar) != invariants.w_bar:
        err_console.print(f"[red]✗[/red] skein relation fails at crossings {failed}")
        raise SystemExit(EXIT_INVARIANT_VIOLATION)


@click.command("export-dot")
@click.argument("diagram")
@click.option(
    "--graph",
    "graph_kind",
    type=click.Choice(["t1", "t2", "ribbon-a", "ribbon-b"]),
    default="t1",
    help="Tait graph (black or white faces) or all-A/all-B ribbon graph",
)
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_context
@handle_errors
def export_dot(ctx: click.Context, diagram: str, graph_kind: str, output: Path | None) -> None:
    """Export a Tait graph or ribbon graph as Graphviz DOT."""
    parsed, _ = resolve_diagram(ctx, diagram)
    renderer = get_renderer()
    if graph_kind in ("t1", "t2"):
        _, t1, t2 = labeled_tait_graphs(parsed)
        dot = renderer.tait(t1 if graph_kind == "t1" else t2, parsed)
    else:
        choice = Splicing.A if graph_kind == "ribbon-a" else Splicing.B
        dot = renderer.ribbon(ribbon_graph(parsed, choice), parsed)

    if output is None:
        click.echo(dot, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(dot, encoding="utf-8")
    err_console.print(f"[green]✓[/green] Wrote {graph_kind} to {output}")
