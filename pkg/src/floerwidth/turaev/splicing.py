"""All-A and all-B splicing states."""

from __future__ import annotations

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import InvariantViolationError
from floerwidth.core.types import FaceColor, Quadrant, Splicing
from floerwidth.diagram.model import LinkDiagram, slot_partners
from floerwidth.diagram.planar import PlaneMap

# A splice segment: (crossing, index into Splicing.slot_pairs).
HalfEdge = tuple[int, int]


class Circle(BaseModel):
    """One circle of a splicing state, as the arc ends it runs into, in order."""

    model_config = ConfigDict(frozen=True)

    arrivals: tuple[Quadrant, ...] = Field(
        ..., description="(crossing, slot) reached at the end of each arc traversal"
    )
    segments: tuple[HalfEdge, ...] = Field(
        ..., description="Splice segments passed, in the same order"
    )


class SplicingState(BaseModel):
    """Every crossing replaced by the same smoothing."""

    model_config = ConfigDict(frozen=True)

    choice: Splicing
    circles: tuple[Circle, ...] = Field(..., description="Circles through crossings")
    unknots: int = Field(default=0, description="Crossingless circles carried over")

    @property
    def circle_count(self) -> int:
        return len(self.circles) + self.unknots

    def circle_of(self, segment: HalfEdge) -> int:
        for index, circle in enumerate(self.circles):
            if segment in circle.segments:
                return index
        raise KeyError(segment)


def _pair_index(choice: Splicing, slot: int) -> int:
    return 0 if slot in choice.slot_pairs[0] else 1


def _walk(
    start: Quadrant, choice: Splicing, partners: dict[Quadrant, Quadrant]
) -> Circle:
    arrivals: list[Quadrant] = []
    segments: list[HalfEdge] = []
    current = start
    while True:
        crossing, slot = current
        arrivals.append(current)
        segments.append((crossing, _pair_index(choice, slot)))
        current = partners[(crossing, choice.partner_slot(slot))]
        if current == start:
            return Circle(arrivals=tuple(arrivals), segments=tuple(segments))


def _count_by_union_find(diagram: LinkDiagram, choice: Splicing) -> int:
    ends = UnionFind(
        (crossing, slot) for crossing in range(diagram.crossing_count) for slot in range(4)
    )
    for (crossing, slot), far in slot_partners(diagram.crossings).items():
        ends.union((crossing, slot), far)
    for crossing in range(diagram.crossing_count):
        for first, second in choice.slot_pairs:
            ends.union((crossing, first), (crossing, second))
    return len(list(ends.to_sets()))


def splice_all(
    diagram: LinkDiagram,
    choice: Splicing,
    plane_map: PlaneMap | None = None,
) -> SplicingState:
    """
    Smooth every crossing with ``choice``.

    Circles are walked from their lowest arc. With a plane map each circle
    is walked keeping the white faces on its left; otherwise towards the
    head of that arc.
    """
    partners = slot_partners(diagram.crossings)
    seen: set[Quadrant] = set()
    circles: list[Circle] = []
    for arc in diagram.arcs:
        head, tail = diagram.head(arc), diagram.tail(arc)
        if head in seen or tail in seen:
            continue
        start = head
        if plane_map is not None:
            crossing, slot = head
            if plane_map.quadrant_color(crossing, (slot - 1) % 4) is not FaceColor.WHITE:
                start = tail
        circle = _walk(start, choice, partners)
        circles.append(circle)
        for crossing, slot in circle.arrivals:
            seen.add((crossing, slot))
            seen.add(partners[(crossing, slot)])

    if len(circles) != _count_by_union_find(diagram, choice):
        raise InvariantViolationError(
            "circle-count",
            f"circle walk and union-find disagree on the all-{choice.value} state",
            {"pd": str(diagram)},
        )
    return SplicingState(choice=choice, circles=tuple(circles), unknots=diagram.unknots)
