"""Ribbon graphs D(A), D(B) of a diagram and their boundary walks."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import InvariantViolationError, SplitDiagramError
from floerwidth.core.types import Splicing
from floerwidth.diagram.model import LinkDiagram
from floerwidth.diagram.planar import build_map
from floerwidth.turaev.splicing import HalfEdge, splice_all


class RibbonGraph(BaseModel):
    """
    Circles of a splicing state contracted to vertices, one edge per crossing.

    ``rotation[v]`` lists the half-edges at vertex ``v`` in cyclic order; the
    half-edges of crossing ``c`` are ``(c, 0)`` and ``(c, 1)``.
    """

    model_config = ConfigDict(frozen=True)

    choice: Splicing
    rotation: tuple[tuple[HalfEdge, ...], ...] = Field(..., description="Cyclic order per vertex")
    edge_count: int = Field(..., ge=0)

    @property
    def faces(self) -> tuple[tuple[HalfEdge, ...], ...]:
        return boundary_walks(self.rotation)

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def face_count(self) -> int:
        # A vertex with no edges is a sphere: one face around it.
        return len(self.faces) + sum(1 for half_edges in self.rotation if not half_edges)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def genus(self) -> int:
        chi = self.euler_characteristic
        if chi % 2 or chi > 2:
            raise InvariantViolationError(
                "ribbon-genus",
                f"ribbon graph has Euler characteristic {chi}",
                {"V": self.vertex_count, "E": self.edge_count, "F": self.face_count},
            )
        return (2 - chi) // 2


def boundary_walks(
    rotation: tuple[tuple[HalfEdge, ...], ...],
) -> tuple[tuple[HalfEdge, ...], ...]:
    """Orbits of the face permutation: cross the edge, then turn to the next half-edge."""
    following: dict[HalfEdge, HalfEdge] = {}
    for half_edges in rotation:
        for index, half_edge in enumerate(half_edges):
            following[half_edge] = half_edges[(index + 1) % len(half_edges)]

    def opposite(half_edge: HalfEdge) -> HalfEdge:
        crossing, side = half_edge
        return (crossing, 1 - side)

    seen: set[HalfEdge] = set()
    orbits: list[tuple[HalfEdge, ...]] = []
    for start in sorted(following):
        if start in seen:
            continue
        orbit: list[HalfEdge] = []
        current = start
        while current not in seen:
            seen.add(current)
            orbit.append(current)
            current = following[opposite(current)]
        orbits.append(tuple(orbit))
    return tuple(orbits)


def ribbon_graph(diagram: LinkDiagram, choice: Splicing) -> RibbonGraph:
    """
    Ribbon graph of a non-split diagram's all-``choice`` state.

    Each circle is traversed with the white faces on its left, and the splice
    segments met along the way give the rotation at its vertex.

    Raises:
        SplitDiagramError: The diagram has more than one split part.
    """
    if diagram.is_split:
        raise SplitDiagramError(diagram.split_part_count, diagram.crossing_count)
    if not diagram.crossings:
        return RibbonGraph(choice=choice, rotation=((),), edge_count=0)
    state = splice_all(diagram, choice, build_map(diagram))
    return RibbonGraph(
        choice=choice,
        rotation=tuple(circle.segments for circle in state.circles),
        edge_count=diagram.crossing_count,
    )
