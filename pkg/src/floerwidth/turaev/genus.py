"""Turaev surface genus by bouquet reduction, cross-checked against ribbon graphs."""

from __future__ import annotations

from typing import Any

import networkx as nx
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import InvariantViolationError
from floerwidth.core.types import CheckName, Splicing
from floerwidth.diagram.model import LinkDiagram, split_components
from floerwidth.observability.logging import get_logger
from floerwidth.tait.graphs import TaitGraph, cycle_conditions, labeled_tait_graphs
from floerwidth.turaev.ribbon import ribbon_graph
from floerwidth.turaev.splicing import splice_all

logger = get_logger(__name__)


class Bouquet(BaseModel):
    """What is left of a Tait graph after bouquet reduction."""

    model_config = ConfigDict(frozen=True)

    vertices: int
    loops: int

    @property
    def circles(self) -> int:
        return self.vertices + self.loops


def bouquet_reduce(graph: TaitGraph, keep_sign: int) -> Bouquet:
    """
    Delete edges of the other sign, contract non-loop kept edges, count what remains.

    The result is cross-checked against the closed form: vertices are the
    components of the kept subgraph and loops its cycle rank.
    """
    kept = [edge for edge in graph.edges if edge.sign == keep_sign]
    merged = UnionFind(graph.vertices)
    loops = 0
    for edge in kept:
        u, v = edge.ends
        if merged[u] == merged[v]:
            loops += 1
        else:
            merged.union(u, v)
    vertices = len(list(merged.to_sets()))

    components = nx.number_connected_components(graph.to_networkx(sign=keep_sign))
    if vertices != components or loops != len(kept) - graph.vertex_count + components:
        raise InvariantViolationError(
            "bouquet",
            "bouquet reduction disagrees with the component/cycle-rank formula",
            {"vertices": vertices, "loops": loops, "components": components, "kept": len(kept)},
        )
    return Bouquet(vertices=vertices, loops=loops)


class PartGenus(BaseModel):
    """Cellulation counts of one non-split part."""

    model_config = ConfigDict(frozen=True)

    vertices: int = Field(..., description="V: circles of the all-A state")
    edges: int = Field(..., description="E: crossings")
    faces: int = Field(..., description="F: circles of the all-B state")

    @property
    def chi(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def genus(self) -> int:
        return (2 - self.chi) // 2


def _part_genus(part: LinkDiagram, flip_colors: bool = False) -> PartGenus:
    if not part.crossings:
        return PartGenus(vertices=1, edges=0, faces=1)
    _, t1, t2 = labeled_tait_graphs(part, flip_colors=flip_colors)
    counts = PartGenus(
        vertices=bouquet_reduce(t1, 1).circles,
        edges=part.crossing_count,
        faces=bouquet_reduce(t2, -1).circles,
    )
    reproduction = {"pd": str(part)}
    if counts.chi % 2:
        raise InvariantViolationError(
            CheckName.WIDTH_GENUS.value, f"odd Euler characteristic {counts.chi}", reproduction
        )
    for choice in (Splicing.A, Splicing.B):
        ribbon = ribbon_graph(part, choice)
        if ribbon.genus != counts.genus:
            raise InvariantViolationError(
                CheckName.WIDTH_GENUS.value,
                f"D({choice.value}) has genus {ribbon.genus}, bouquet count gives {counts.genus}",
                reproduction,
            )
    return counts


def _parts(diagram: LinkDiagram, flip_colors: bool = False) -> list[PartGenus]:
    return [_part_genus(part, flip_colors) for part in split_components(diagram)]


def component_genera(diagram: LinkDiagram, flip_colors: bool = False) -> list[int]:
    """Turaev genus of each split part, in split_components order."""
    return [part.genus for part in _parts(diagram, flip_colors)]


def _sum(parts: list[PartGenus]) -> PartGenus:
    return PartGenus(
        vertices=sum(p.vertices for p in parts),
        edges=sum(p.edges for p in parts),
        faces=sum(p.faces for p in parts),
    )


def turaev_genus_diagram(diagram: LinkDiagram, flip_colors: bool = False) -> int:
    """
    Genus of the Turaev surface, (2 - V + E - F) / 2 per split part.

    A split diagram has one surface per part and gets the sum of their genera.
    The normalized genus, one less per extra part, is ``normalized_genus``.
    """
    return sum(component_genera(diagram, flip_colors))


def euler_characteristic(diagram: LinkDiagram) -> int:
    """Sum of 2 - 2g over split parts; a crossingless circle contributes 2."""
    return _sum(_parts(diagram)).chi


def predict_genus_change(diagram: LinkDiagram, crossing: int) -> int:
    """Same cycle test as the width prediction: +1, 0 or -1."""
    return cycle_conditions(diagram, crossing).predicted_change


class TuraevReport(BaseModel):
    """Per-diagram cellulation summary."""

    model_config = ConfigDict(frozen=True)

    vertices: int
    edges: int
    faces: int
    chi: int
    genus: tuple[int, ...] = Field(..., description="Genus of each split part")
    circles_a: int
    circles_b: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "E": self.edges,
            "F": self.faces,
            "V": self.vertices,
            "chi": self.chi,
            "circles_A": self.circles_a,
            "circles_B": self.circles_b,
            "genus": list(self.genus),
        }


def turaev_report(diagram: LinkDiagram) -> TuraevReport:
    """Cellulation counts, with the circle counts of both splicings checked against V and F."""
    parts = _parts(diagram)
    totals = _sum(parts)
    circles_a = splice_all(diagram, Splicing.A).circle_count
    circles_b = splice_all(diagram, Splicing.B).circle_count
    if (circles_a, circles_b) != (totals.vertices, totals.faces):
        raise InvariantViolationError(
            CheckName.WIDTH_GENUS.value,
            "splicing circle counts disagree with bouquet reduction",
            {
                "pd": str(diagram),
                "circles": [circles_a, circles_b],
                "bouquet": [totals.vertices, totals.faces],
            },
        )
    report = TuraevReport(
        vertices=totals.vertices,
        edges=totals.edges,
        faces=totals.faces,
        chi=totals.chi,
        genus=tuple(part.genus for part in parts),
        circles_a=circles_a,
        circles_b=circles_b,
    )
    logger.debug("Turaev report", **report.to_json_dict())
    return report
