"""Theorem checks run against catalog entries.

Each check takes a catalog entry and returns a CheckResult counting the
cases it examined (one per entry, arc or crossing depending on the check)
together with a reproduction for every case that failed.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

import sympy as sp
from pydantic import BaseModel, Field

from floerwidth.catalog.models import CatalogEntry
from floerwidth.core.config import VerifySettings
from floerwidth.core.exceptions import GradingTableError, InvariantViolationError
from floerwidth.core.types import CheckName
from floerwidth.diagram.model import LinkDiagram, change_crossing
from floerwidth.diagram.parser import canonical_form
from floerwidth.skein.normalized import normalized_width, skein_check, width_via_skein
from floerwidth.states.gradings import get_grading_table
from floerwidth.states.width import (
    X,
    bigrading_table,
    diagram_states,
    eta,
    graded_euler_characteristic,
    is_symmetric,
    predict_width_change,
    width,
)
from floerwidth.tait.graphs import labeled_tait_graphs, spanning_tree_count
from floerwidth.turaev.genus import predict_genus_change, turaev_genus_diagram


class Reproduction(BaseModel):
    """Smallest input that shows a failure: the diagram and the site."""

    check: CheckName
    entry: str | None = None
    pd: str
    site: int | None = Field(default=None, description="Crossing or arc index")
    message: str
    details: dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseModel):
    check: CheckName
    entry: str
    cases: int = 0
    failures: list[Reproduction] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class _Recorder:
    """Accumulates cases for one (check, entry) pair."""

    def __init__(self, check: CheckName, entry: CatalogEntry, diagram: LinkDiagram) -> None:
        self.check = check
        self.entry = entry
        self.pd = canonical_form(diagram)
        self.result = CheckResult(check=check, entry=entry.name)

    def case(
        self,
        ok: bool,
        message: str,
        site: int | None = None,
        **details: Any,
    ) -> None:
        self.result.cases += 1
        if not ok:
            self.fail(message, site, **details)

    def fail(self, message: str, site: int | None = None, **details: Any) -> None:
        self.result.failures.append(
            Reproduction(
                check=self.check,
                entry=self.entry.name,
                pd=self.pd,
                site=site,
                message=message,
                details=details,
            )
        )


def _knot_with_crossings(diagram: LinkDiagram) -> bool:
    return diagram.is_knot and diagram.crossing_count > 0


def check_marked_edge_invariance(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if not _knot_with_crossings(diagram):
        return
    if diagram.crossing_count > settings.marked_edge_max_crossings:
        return
    reference = width(diagram)
    for arc in diagram.arcs:
        value = width(diagram, marked_edge=arc)
        rec.case(
            value == reference,
            f"width {value} with arc {arc} marked, {reference} by default",
            site=arc,
        )


def check_eta_identity(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if not _knot_with_crossings(diagram):
        return
    _, t1, t2 = labeled_tait_graphs(diagram)
    for state in diagram_states(diagram):
        from_labels = eta(state, t1, t2)
        rec.case(
            state.a2 - state.m2 == state.eta == from_labels,
            f"2(A-M) = {state.a2 - state.m2}, eta = {state.eta}, from labels {from_labels}",
            t1_edges=list(state.t1_edges),
        )


def check_width_genus(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    genus = turaev_genus_diagram(diagram)
    if diagram.is_knot:
        value = width(diagram)
        rec.case(value == genus + 1, f"width {value} is not genus {genus} + 1")
    else:
        value = normalized_width(diagram)
        extra = diagram.split_part_count - 1
        rec.case(
            value == genus - extra + 1,
            f"normalized width {value} is not genus {genus} - {extra} + 1",
        )
    if entry.known_width is not None:
        rec.case(
            value == entry.known_width,
            f"width {value} differs from the declared {entry.known_width}",
        )
    if entry.known_genus is not None:
        rec.case(
            genus == entry.known_genus,
            f"genus {genus} differs from the declared {entry.known_genus}",
        )


def check_crossing_change(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if not _knot_with_crossings(diagram):
        return
    if diagram.crossing_count > settings.crossing_change_max_crossings:
        return
    before = width(diagram)
    for crossing in range(diagram.crossing_count):
        predicted = predict_width_change(diagram, crossing)
        actual = width(change_crossing(diagram, crossing)) - before
        rec.case(
            actual == predicted,
            f"width changed by {actual}, predicted {predicted}",
            site=crossing,
        )


def check_genus_change(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if diagram.crossing_count > settings.crossing_change_max_crossings:
        return
    before = turaev_genus_diagram(diagram)
    for crossing in range(diagram.crossing_count):
        predicted = predict_genus_change(diagram, crossing)
        actual = turaev_genus_diagram(change_crossing(diagram, crossing)) - before
        rec.case(
            actual == predicted,
            f"genus changed by {actual}, predicted {predicted}",
            site=crossing,
        )


def check_skein(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    for crossing in range(diagram.crossing_count):
        result = skein_check(diagram, crossing)
        rec.case(
            result.passed,
            f"skein relation fails at crossing {crossing}",
            site=crossing,
            quadruple=result.to_json_dict(),
        )
    direct, recursive = normalized_width(diagram), width_via_skein(diagram)
    rec.case(
        direct == recursive,
        f"skein evaluation gives {recursive}, the Turaev surface gives {direct}",
    )


def check_euler_char_symmetry(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if not diagram.is_knot:
        return
    polynomial = graded_euler_characteristic(bigrading_table(diagram))
    at_one = polynomial.subs(X, 1)
    rec.case(
        is_symmetric(polynomial) and at_one in (sp.Integer(1), sp.Integer(-1)),
        f"graded Euler characteristic {polynomial} is not a normalized Alexander polynomial",
        polynomial=str(polynomial),
    )


def check_state_count_oracle(
    entry: CatalogEntry, diagram: LinkDiagram, settings: VerifySettings, rec: _Recorder
) -> None:
    if not _knot_with_crossings(diagram):
        return
    total = bigrading_table(diagram).total
    _, t1, t2 = labeled_tait_graphs(diagram)
    trees = spanning_tree_count(t1), spanning_tree_count(t2)
    rec.case(
        total == trees[0] == trees[1],
        f"{total} states but {trees[0]} and {trees[1]} spanning trees",
    )


CheckFunction = Callable[[CatalogEntry, LinkDiagram, VerifySettings, _Recorder], None]

CHECKS: dict[CheckName, CheckFunction] = {
    CheckName.MARKED_EDGE_INVARIANCE: check_marked_edge_invariance,
    CheckName.ETA_IDENTITY: check_eta_identity,
    CheckName.WIDTH_GENUS: check_width_genus,
    CheckName.CROSSING_CHANGE: check_crossing_change,
    CheckName.GENUS_CHANGE: check_genus_change,
    CheckName.SKEIN: check_skein,
    CheckName.EULER_CHAR_SYMMETRY: check_euler_char_symmetry,
    CheckName.STATE_COUNT_ORACLE: check_state_count_oracle,
}


def run_check(check: CheckName, entry: CatalogEntry, settings: VerifySettings) -> CheckResult:
    """Run one check on one entry; cross-check errors become failures."""
    diagram = entry.diagram()
    rec = _Recorder(check, entry, diagram)
    try:
        CHECKS[check](entry, diagram, settings, rec)
    except InvariantViolationError as e:
        rec.fail(e.message, **e.reproduction)
    return rec.result


def grading_self_check() -> list[Reproduction]:
    """The startup check of the local contribution table against the eta identity."""
    try:
        get_grading_table()
    except GradingTableError as e:
        errors = e.details.get("errors") or [e.message]
        return [
            Reproduction(check=CheckName.ETA_IDENTITY, pd="", message=error, details=e.details)
            for error in errors
        ]
    return []
