"""Bigrading tables, width and the graded Euler characteristic."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from typing import Any

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import NotAKnotError
from floerwidth.core.types import EdgeLetter, FaceColor
from floerwidth.diagram.model import LinkDiagram
from floerwidth.observability.logging import get_logger
from floerwidth.states.enumeration import KauffmanState, enumerate_states, halve
from floerwidth.states.gradings import LocalGradingTable, get_grading_table
from floerwidth.tait.graphs import (
    TaitGraph,
    cycle_conditions,
    in_monochrome_cycle,
    labeled_tait_graphs,
)

logger = get_logger(__name__)

X = sp.Symbol("x")


class BigradingEntry(BaseModel):
    """Number of states in one (A, M) bigrading, gradings doubled."""

    model_config = ConfigDict(frozen=True)

    a2: int
    m2: int
    count: int = Field(..., ge=1)

    @property
    def alexander(self) -> int | float:
        return halve(self.a2)

    @property
    def maslov(self) -> int | float:
        return halve(self.m2)


class BigradingTable(BaseModel):
    """
    State counts per bigrading.

    ``Delta`` and ``delta`` are the extreme values of A - M; the width is
    their difference plus one.
    """

    model_config = ConfigDict(frozen=True)

    entries: tuple[BigradingEntry, ...] = Field(..., description="Sorted by (A, M)")

    @classmethod
    def from_states(cls, states: Iterable[KauffmanState]) -> BigradingTable:
        counts = Counter((state.a2, state.m2) for state in states)
        return cls(
            entries=tuple(
                BigradingEntry(a2=a2, m2=m2, count=n) for (a2, m2), n in sorted(counts.items())
            )
        )

    @property
    def total(self) -> int:
        return sum(entry.count for entry in self.entries)

    @property
    def diagonal_max(self) -> int | float:
        """Delta: the largest A - M."""
        return halve(max(e.a2 - e.m2 for e in self.entries))

    @property
    def diagonal_min(self) -> int | float:
        """delta: the smallest A - M."""
        return halve(min(e.a2 - e.m2 for e in self.entries))

    @property
    def width(self) -> int:
        return int(self.diagonal_max - self.diagonal_min) + 1

    def count(self, alexander: float, maslov: float) -> int:
        for entry in self.entries:
            if entry.a2 == 2 * alexander and entry.m2 == 2 * maslov:
                return entry.count
        return 0

    def as_dict(self) -> dict[tuple[int | float, int | float], int]:
        return {(e.alexander, e.maslov): e.count for e in self.entries}

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "Delta": self.diagonal_max,
            "delta": self.diagonal_min,
            "table": [
                {"A": e.alexander, "M": e.maslov, "count": e.count} for e in self.entries
            ],
            "width": self.width,
        }

    def text_grid(self) -> tuple[list[int | float], list[int | float], list[list[int]]]:
        """(Alexander rows and Maslov columns both increasing, counts grid)."""
        rows = sorted({e.alexander for e in self.entries})
        columns = sorted({e.maslov for e in self.entries})
        counts = self.as_dict()
        grid = [[counts.get((a, m), 0) for m in columns] for a in rows]
        return rows, columns, grid


TRIVIAL_TABLE = BigradingTable(entries=(BigradingEntry(a2=0, m2=0, count=1),))


def state_gradings(
    state: KauffmanState,
    signs: Sequence[int],
    table: LocalGradingTable | None = None,
) -> tuple[int, int]:
    """Doubled (A, M) of a state, summed from the local tables at its dots."""
    table = table or get_grading_table()
    a2 = m2 = 0
    for crossing, quadrant in enumerate(state.dots):
        da, dm = table.contribution(signs[crossing], quadrant)
        a2 += da
        m2 += dm
    return a2, m2


def eta(state: KauffmanState, t1: TaitGraph, t2: TaitGraph) -> int:
    """#alpha+ minus #beta- among the state's edges, read from the graph labels."""
    edges = [t1.edge(c) for c in state.t1_edges] + [t2.edge(c) for c in state.t2_edges]
    positive_alpha = sum(1 for e in edges if e.letter is EdgeLetter.ALPHA and e.is_positive)
    negative_beta = sum(1 for e in edges if e.letter is EdgeLetter.BETA and not e.is_positive)
    return positive_alpha - negative_beta


def diagram_states(diagram: LinkDiagram, marked_edge: int | None = None) -> list[KauffmanState]:
    """Kauffman states of a knot diagram with at least one crossing."""
    if not diagram.is_knot:
        raise NotAKnotError(diagram.component_count)
    plane_map, t1, t2 = labeled_tait_graphs(diagram, marked_edge)
    return enumerate_states(t1, t2, plane_map)


def bigrading_table(diagram: LinkDiagram, marked_edge: int | None = None) -> BigradingTable:
    """
    Count states per bigrading.

    A crossingless unknot has the single trivial state at A = M = 0.

    Raises:
        NotAKnotError: The diagram is a link.
    """
    if not diagram.is_knot:
        raise NotAKnotError(diagram.component_count)
    if not diagram.crossings:
        return TRIVIAL_TABLE
    table = BigradingTable.from_states(diagram_states(diagram, marked_edge))
    logger.debug("Built bigrading table", entries=len(table.entries), width=table.width)
    return table


def width(diagram: LinkDiagram, marked_edge: int | None = None) -> int:
    """Width of a knot diagram from its Kauffman states: (max eta - min eta)/2 + 1."""
    if not diagram.is_knot:
        raise NotAKnotError(diagram.component_count)
    if not diagram.crossings:
        return 1
    etas = [state.eta for state in diagram_states(diagram, marked_edge)]
    return (max(etas) - min(etas)) // 2 + 1


def graded_euler_characteristic(table: BigradingTable) -> sp.Expr:
    """Sum of (-1)^M * count * x^A as a Laurent polynomial in ``x``."""
    total: sp.Expr = sp.Integer(0)
    for entry in table.entries:
        sign = 1 if int(entry.maslov) % 2 == 0 else -1
        total += sign * entry.count * X ** sp.Rational(entry.a2, 2)
    return sp.expand(total)


def is_symmetric(polynomial: sp.Expr) -> bool:
    """p(x) = p(1/x)."""
    return bool(sp.expand(polynomial - polynomial.subs(X, 1 / X)) == 0)


def predict_width_change(diagram: LinkDiagram, crossing: int) -> int:
    """
    Width change expected from changing ``crossing``.

    +1 when the positive edge lies in a positive cycle and the negative edge in
    a negative cycle, -1 when neither does, 0 otherwise.
    """
    return cycle_conditions(diagram, crossing).predicted_change


class ExtremalEdges(BaseModel):
    """Edges every eta-extremal state must use, as (color, crossing) pairs."""

    model_config = ConfigDict(frozen=True)

    in_every_max: tuple[tuple[FaceColor, int], ...]
    in_every_min: tuple[tuple[FaceColor, int], ...]


def lemma_extremal_edges(diagram: LinkDiagram, marked_edge: int | None = None) -> ExtremalEdges:
    """
    Edges forced into extremal states.

    A positive edge in no positive cycle belongs to every state of maximal
    eta; a negative edge in no negative cycle belongs to every state of
    minimal eta.
    """
    _, t1, t2 = labeled_tait_graphs(diagram, marked_edge)
    forced_max: list[tuple[FaceColor, int]] = []
    forced_min: list[tuple[FaceColor, int]] = []
    for graph in (t1, t2):
        for edge in graph.edges:
            if in_monochrome_cycle(graph, edge):
                continue
            target = forced_max if edge.is_positive else forced_min
            target.append((graph.color, edge.crossing))
    return ExtremalEdges(in_every_max=tuple(forced_max), in_every_min=tuple(forced_min))


def state_edges(state: KauffmanState) -> set[tuple[FaceColor, int]]:
    """The state's edges as (color, crossing) pairs."""
    return {(FaceColor.BLACK, c) for c in state.t1_edges} | {
        (FaceColor.WHITE, c) for c in state.t2_edges
    }
