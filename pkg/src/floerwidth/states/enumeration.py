"""Kauffman states as rooted spanning-tree pairs of the Tait graphs."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Mapping, Sequence

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.config import get_settings
from floerwidth.core.exceptions import (
    InvariantViolationError,
    NotAKnotError,
    StateLimitExceededError,
)
from floerwidth.core.types import CheckName, EdgeLetter
from floerwidth.diagram.planar import PlaneMap
from floerwidth.observability.logging import get_logger
from floerwidth.states.gradings import LocalGradingTable, get_grading_table
from floerwidth.tait.graphs import TaitEdge, TaitGraph

logger = get_logger(__name__)


def halve(doubled: int) -> int | float:
    return doubled // 2 if doubled % 2 == 0 else doubled / 2


class KauffmanState(BaseModel):
    """
    One Kauffman state.

    Gradings are stored doubled so they stay integral; ``alexander`` and
    ``maslov`` give the presentation values.
    """

    model_config = ConfigDict(frozen=True)

    t1_edges: tuple[int, ...] = Field(..., description="Crossings whose T1 edge is in t1")
    t2_edges: tuple[int, ...] = Field(..., description="Crossings whose T2 edge is in t2")
    dots: tuple[int, ...] = Field(..., description="Dotted quadrant per crossing")
    a2: int = Field(..., description="Twice the Alexander filtration level")
    m2: int = Field(..., description="Twice the Maslov grading")
    eta: int = Field(..., description="#alpha+ minus #beta- edges of the state")

    @property
    def alexander(self) -> int | float:
        return halve(self.a2)

    @property
    def maslov(self) -> int | float:
        return halve(self.m2)

    @property
    def bigrading(self) -> tuple[int | float, int | float]:
        return self.alexander, self.maslov


def spanning_trees(graph: TaitGraph) -> Iterator[tuple[int, ...]]:
    """
    Spanning trees of a Tait multigraph by deletion-contraction.

    Trees are yielded as sorted tuples of crossing indices. An edge is
    contracted only when its ends are still apart, and deleted only when the
    remaining edges can still connect everything.
    """
    edges = [edge for edge in graph.edges if not edge.is_loop]
    need = graph.vertex_count - 1

    def can_span(rep: Mapping[int, int], start: int) -> bool:
        joined = UnionFind(set(rep.values()))
        for edge in edges[start:]:
            joined.union(rep[edge.ends[0]], rep[edge.ends[1]])
        return len(list(joined.to_sets())) == 1

    def extend(
        index: int, chosen: tuple[int, ...], rep: dict[int, int]
    ) -> Iterator[tuple[int, ...]]:
        if len(chosen) == need:
            yield tuple(sorted(chosen))
            return
        if index == len(edges):
            return
        edge = edges[index]
        u, v = rep[edge.ends[0]], rep[edge.ends[1]]
        if u != v:
            merged = {vertex: (u if r == v else r) for vertex, r in rep.items()}
            yield from extend(index + 1, (*chosen, edge.crossing), merged)
        if can_span(rep, index + 1):
            yield from extend(index + 1, chosen, rep)

    yield from extend(0, (), {vertex: vertex for vertex in graph.vertices})


def _is_spanning_tree(graph: TaitGraph, crossings: Sequence[int]) -> bool:
    if len(crossings) != graph.vertex_count - 1:
        return False
    joined = UnionFind(graph.vertices)
    for crossing in crossings:
        u, v = graph.edge(crossing).ends
        if joined[u] == joined[v]:
            return False
        joined.union(u, v)
    return True


def _dot_quadrants(graph: TaitGraph, tree: Sequence[int], root: int) -> dict[int, int]:
    """Direct tree edges away from ``root``; each crossing's dot sits in its head face."""
    adjacency: dict[int, list[TaitEdge]] = {vertex: [] for vertex in graph.vertices}
    for crossing in tree:
        edge = graph.edge(crossing)
        adjacency[edge.ends[0]].append(edge)
        adjacency[edge.ends[1]].append(edge)
    dots: dict[int, int] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for edge in adjacency[vertex]:
            head = edge.ends[1] if edge.ends[0] == vertex else edge.ends[0]
            if head in seen:
                continue
            seen.add(head)
            dots[edge.crossing] = edge.head_quadrant(head)
            queue.append(head)
    return dots


def _eta(edges: Sequence[TaitEdge]) -> int:
    eta = 0
    for edge in edges:
        if edge.letter is EdgeLetter.ALPHA and edge.is_positive:
            eta += 1
        elif edge.letter is EdgeLetter.BETA and not edge.is_positive:
            eta -= 1
    return eta


def build_state(
    t1: TaitGraph,
    t2: TaitGraph,
    plane_map: PlaneMap,
    tree: Sequence[int],
    table: LocalGradingTable | None = None,
) -> KauffmanState:
    """Complete a spanning tree of T1 to a graded Kauffman state."""
    table = table or get_grading_table()
    signs = plane_map.diagram.signs
    in_t1 = set(tree)
    complement = tuple(c for c in range(len(signs)) if c not in in_t1)
    if not _is_spanning_tree(t2, complement):
        raise InvariantViolationError(
            CheckName.STATE_COUNT_ORACLE.value,
            "dual complement of a T1 spanning tree is not a T2 spanning tree",
            {"pd": str(plane_map.diagram), "t1": list(tree)},
        )

    dots = _dot_quadrants(t1, tree, plane_map.q_face)
    dots.update(_dot_quadrants(t2, complement, plane_map.r_face))
    a2 = m2 = 0
    for crossing, quadrant in dots.items():
        da, dm = table.contribution(signs[crossing], quadrant)
        a2 += da
        m2 += dm
    edges = [t1.edge(c) for c in tree] + [t2.edge(c) for c in complement]
    return KauffmanState(
        t1_edges=tuple(sorted(tree)),
        t2_edges=complement,
        dots=tuple(dots[c] for c in range(len(signs))),
        a2=a2,
        m2=m2,
        eta=_eta(edges),
    )


def iter_states(
    t1: TaitGraph,
    t2: TaitGraph,
    plane_map: PlaneMap,
    max_states: int | None = None,
) -> Iterator[KauffmanState]:
    """
    Lazily enumerate the Kauffman states of a connected knot diagram.

    Raises:
        NotAKnotError: The diagram has more than one component.
        StateLimitExceededError: More than ``max_states`` states.
    """
    diagram = plane_map.diagram
    if not diagram.is_knot:
        raise NotAKnotError(diagram.component_count)
    limit = max_states if max_states is not None else get_settings().states.max_states
    table = get_grading_table()
    for produced, tree in enumerate(spanning_trees(t1), start=1):
        if produced > limit:
            raise StateLimitExceededError(limit)
        yield build_state(t1, t2, plane_map, tree, table)


def enumerate_states(
    t1: TaitGraph,
    t2: TaitGraph,
    plane_map: PlaneMap,
    max_states: int | None = None,
) -> list[KauffmanState]:
    """All Kauffman states for the marked edge fixed in ``plane_map``."""
    states = list(iter_states(t1, t2, plane_map, max_states))
    logger.debug(
        "Enumerated Kauffman states",
        crossings=plane_map.diagram.crossing_count,
        marked_edge=plane_map.marked_edge,
        states=len(states),
    )
    return states
