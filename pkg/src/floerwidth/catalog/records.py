"""Building result records from the diagram, states and Turaev pipelines."""

from __future__ import annotations

from floerwidth import __version__
from floerwidth.catalog.models import ResultRecord
from floerwidth.core.exceptions import InvariantViolationError
from floerwidth.core.types import CheckName
from floerwidth.diagram.model import LinkDiagram
from floerwidth.diagram.parser import canonical_form
from floerwidth.observability.logging import get_logger
from floerwidth.skein.normalized import normalized_width
from floerwidth.states.width import bigrading_table
from floerwidth.turaev.genus import turaev_report

logger = get_logger(__name__)


def compute_record(
    diagram: LinkDiagram,
    name: str | None = None,
    marked_edge: int | None = None,
) -> ResultRecord:
    """
    Run every pipeline on ``diagram`` and collect the invariants.

    Knots get their Kauffman states enumerated; links only get the
    normalized width. For knots the state width must equal the Turaev genus
    plus one.

    Raises:
        InvariantViolationError: The two computations disagree.
    """
    canonical = canonical_form(diagram)
    report = turaev_report(diagram)
    state_count = diagonal_max = diagonal_min = None
    if diagram.is_knot:
        table = bigrading_table(diagram, marked_edge)
        state_count = table.total
        diagonal_max, diagonal_min = table.diagonal_max, table.diagonal_min
        width = table.width
        if width != report.genus[0] + 1:
            raise InvariantViolationError(
                CheckName.WIDTH_GENUS.value,
                f"width {width} is not genus {report.genus[0]} + 1",
                {"pd": canonical, "name": name, "marked_edge": marked_edge},
            )
    else:
        width = normalized_width(diagram)

    record = ResultRecord(
        canonical=canonical,
        name=name,
        V=report.vertices,
        E=report.edges,
        F=report.faces,
        chi=report.chi,
        genus=list(report.genus),
        width=width,
        state_count=state_count,
        Delta=diagonal_max,
        delta=diagonal_min,
        version=__version__,
    )
    logger.debug("Computed record", pd=canonical, name=name, width=width)
    return record
