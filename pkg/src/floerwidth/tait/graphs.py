"""Checkerboard (Tait) graphs with the alpha/beta, +/- edge labels."""

from __future__ import annotations

from collections.abc import Sequence

import networkx as nx
import sympy as sp
from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import UnknownCrossingError
from floerwidth.core.types import EdgeLetter, FaceColor
from floerwidth.diagram.model import LinkDiagram, split_components
from floerwidth.diagram.planar import PlaneMap, build_map


class TaitEdge(BaseModel):
    """One crossing seen as an edge between two faces of the same color."""

    model_config = ConfigDict(frozen=True)

    crossing: int = Field(..., description="Crossing index, shared with the dual edge")
    ends: tuple[int, int] = Field(..., description="Face indices of the endpoints")
    quadrants: tuple[int, int] = Field(..., description="Quadrant of each endpoint at the crossing")
    letter: EdgeLetter | None = Field(default=None)
    sign: int | None = Field(default=None, description="+1 or -1 once labeled")

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    @property
    def is_positive(self) -> bool:
        return self.sign == 1

    @property
    def label(self) -> str:
        if self.letter is None or self.sign is None:
            return "?"
        return f"{self.letter.value}{'+' if self.sign > 0 else '-'}"

    def head_quadrant(self, head: int) -> int:
        """Quadrant at the crossing that lies in face ``head``."""
        return self.quadrants[0] if self.ends[0] == head else self.quadrants[1]


class TaitGraph(BaseModel):
    """A Tait multigraph: faces of one color joined through crossings."""

    model_config = ConfigDict(frozen=True)

    color: FaceColor
    vertices: tuple[int, ...] = Field(..., description="Face indices of this color")
    edges: tuple[TaitEdge, ...] = Field(..., description="One edge per crossing, in crossing order")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge(self, crossing: int) -> TaitEdge:
        if not 0 <= crossing < len(self.edges):
            raise UnknownCrossingError(crossing, len(self.edges))
        return self.edges[crossing]

    def to_networkx(self, sign: int | None = None, without: int | None = None) -> nx.MultiGraph:
        """MultiGraph keyed by crossing, optionally restricted to one sign."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            if edge.crossing == without or (sign is not None and edge.sign != sign):
                continue
            graph.add_edge(*edge.ends, key=edge.crossing, label=edge.label)
        return graph


def tait_graphs(plane_map: PlaneMap) -> tuple[TaitGraph, TaitGraph]:
    """
    Unlabeled Tait graphs (T1 over black faces, T2 over white faces).

    At every crossing the two faces in quadrants 0 and 2 share a color, as do
    those in quadrants 1 and 3; each pair gives the edge of its color's graph.
    """
    black: list[TaitEdge] = []
    white: list[TaitEdge] = []
    for crossing in range(plane_map.diagram.crossing_count):
        for first, second in ((0, 2), (1, 3)):
            edge = TaitEdge(
                crossing=crossing,
                ends=(
                    plane_map.face_of[(crossing, first)],
                    plane_map.face_of[(crossing, second)],
                ),
                quadrants=(first, second),
            )
            if plane_map.quadrant_color(crossing, first) is FaceColor.BLACK:
                black.append(edge)
            else:
                white.append(edge)
    t1 = TaitGraph(
        color=FaceColor.BLACK,
        vertices=tuple(plane_map.faces_of_color(FaceColor.BLACK)),
        edges=tuple(black),
    )
    t2 = TaitGraph(
        color=FaceColor.WHITE,
        vertices=tuple(plane_map.faces_of_color(FaceColor.WHITE)),
        edges=tuple(white),
    )
    return t1, t2


def _labeled(edge: TaitEdge, crossing_sign: int) -> TaitEdge:
    # The A-smoothing joins the faces in quadrants 1 and 3.
    sign = 1 if set(edge.quadrants) == {1, 3} else -1
    letter = EdgeLetter.ALPHA if crossing_sign > 0 else EdgeLetter.BETA
    return edge.model_copy(update={"sign": sign, "letter": letter})


def label_edges(
    t1: TaitGraph, t2: TaitGraph, signs: Sequence[int]
) -> tuple[TaitGraph, TaitGraph]:
    """Attach the letter (alpha at positive crossings) and the sign to every edge."""
    return (
        t1.model_copy(update={"edges": tuple(_labeled(e, signs[e.crossing]) for e in t1.edges)}),
        t2.model_copy(update={"edges": tuple(_labeled(e, signs[e.crossing]) for e in t2.edges)}),
    )


def labeled_tait_graphs(
    diagram: LinkDiagram,
    marked_edge: int | None = None,
    flip_colors: bool = False,
) -> tuple[PlaneMap, TaitGraph, TaitGraph]:
    """Plane map and labeled Tait graphs of a non-split diagram."""
    plane_map = build_map(diagram, marked_edge, flip_colors=flip_colors)
    t1, t2 = label_edges(*tait_graphs(plane_map), diagram.signs)
    return plane_map, t1, t2


def _changed(edge: TaitEdge) -> TaitEdge:
    flipped = EdgeLetter.BETA if edge.letter is EdgeLetter.ALPHA else EdgeLetter.ALPHA
    # Quadrants rotate by one slot: forward from a positive crossing, back from a negative one.
    shift = 1 if edge.letter is EdgeLetter.ALPHA else -1
    return edge.model_copy(
        update={
            "letter": flipped,
            "sign": -edge.sign if edge.sign is not None else None,
            "quadrants": tuple((q + shift) % 4 for q in edge.quadrants),
        }
    )


def crossing_change(
    t1: TaitGraph, t2: TaitGraph, crossing: int
) -> tuple[TaitGraph, TaitGraph]:
    """Relabel the dual edge pair at ``crossing`` as after a crossing change."""
    t1.edge(crossing)

    def update(graph: TaitGraph) -> TaitGraph:
        edges = tuple(_changed(e) if e.crossing == crossing else e for e in graph.edges)
        return graph.model_copy(update={"edges": edges})

    return update(t1), update(t2)


def dual_edge(edge: TaitEdge, other: TaitGraph) -> TaitEdge:
    """The opposite-color edge at the same crossing."""
    for candidate in other.edges:
        if candidate.crossing == edge.crossing:
            return candidate
    raise UnknownCrossingError(edge.crossing, len(other.edges))


def in_monochrome_cycle(graph: TaitGraph, edge: TaitEdge) -> bool:
    """True iff ``edge`` lies on a cycle all of whose edges carry its sign."""
    if edge.is_loop:
        return True
    rest = graph.to_networkx(sign=edge.sign, without=edge.crossing)
    return bool(nx.has_path(rest, *edge.ends))


def spanning_tree_count(graph: TaitGraph) -> int:
    """Matrix-tree count with exact fraction-free elimination; loops are ignored."""
    index = {vertex: n for n, vertex in enumerate(graph.vertices)}
    size = len(index)
    if size == 1:
        return 1
    laplacian = sp.zeros(size, size)
    for edge in graph.edges:
        u, v = index[edge.ends[0]], index[edge.ends[1]]
        if u == v:
            continue
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    return int(laplacian[1:, 1:].det(method="bareiss"))


def is_monochrome(graph: TaitGraph) -> bool:
    return len({edge.sign for edge in graph.edges}) <= 1


def is_alternating(diagram: LinkDiagram) -> bool:
    """Every non-split part has a Tait graph whose edges all carry one sign."""
    for part in split_components(diagram):
        if not part.crossings:
            continue
        _, t1, _ = labeled_tait_graphs(part)
        if not is_monochrome(t1):
            return False
    return True


class CycleConditions(BaseModel):
    """Cycle tests for the dual edge pair at one crossing."""

    model_config = ConfigDict(frozen=True)

    crossing: int
    positive_edge: TaitEdge
    negative_edge: TaitEdge
    positive_in_cycle: bool = Field(..., description="e+ lies on a cycle of positive edges")
    negative_in_cycle: bool = Field(..., description="e- lies on a cycle of negative edges")

    @property
    def predicted_change(self) -> int:
        """+1 if both conditions hold, 0 if exactly one does, -1 if neither."""
        return int(self.positive_in_cycle) + int(self.negative_in_cycle) - 1


def cycle_conditions(diagram: LinkDiagram, crossing: int) -> CycleConditions:
    """Evaluate the positive/negative cycle conditions at one crossing of any diagram."""
    diagram.check_crossing(crossing)
    for indices in diagram.orientation.split_parts:
        if crossing not in indices:
            continue
        part = LinkDiagram(crossings=tuple(diagram.crossings[i] for i in indices))
        local = indices.index(crossing)
        _, t1, t2 = labeled_tait_graphs(part)
        first, second = t1.edge(local), t2.edge(local)
        positive, negative = (first, second) if first.is_positive else (second, first)
        return CycleConditions(
            crossing=crossing,
            positive_edge=positive,
            negative_edge=negative,
            positive_in_cycle=in_monochrome_cycle(t1 if positive is first else t2, positive),
            negative_in_cycle=in_monochrome_cycle(t1 if negative is first else t2, negative),
        )
    raise UnknownCrossingError(crossing, diagram.crossing_count)
