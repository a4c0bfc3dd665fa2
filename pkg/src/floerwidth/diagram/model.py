"""Oriented link diagrams in planar diagram (PD) form.

A crossing is a tuple X(a, b, c, d) of arc labels listed counterclockwise,
starting from the incoming under arc ``a``. The under strand runs a -> c and
the over strand occupies slots 1 and 3. Each link component owns a contiguous
range of labels and is oriented by increasing label, wrapping from the
largest label of the component back to its smallest. A two-arc component
that never passes under reads the same both ways; its lowest arc is taken to
run into the lower-indexed of its two crossings.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field, model_validator

from floerwidth.core.exceptions import (
    InvalidDiagramError,
    NonPlanarDiagramError,
    UnknownArcError,
    UnknownCrossingError,
)
from floerwidth.core.types import PDTuple, Quadrant


class Orientation(BaseModel):
    """Orientation data derived from a validated crossing list."""

    model_config = ConfigDict(frozen=True)

    signs: tuple[int, ...] = Field(..., description="Crossing sign per crossing index")
    components: tuple[tuple[int, int], ...] = Field(
        ..., description="(lowest, highest) arc label of each component, sorted"
    )
    heads: dict[int, Quadrant] = Field(..., description="Crossing slot each arc runs into")
    tails: dict[int, Quadrant] = Field(..., description="Crossing slot each arc leaves from")
    split_parts: tuple[tuple[int, ...], ...] = Field(
        ..., description="Crossing indices of each non-split part"
    )
    faces: tuple[tuple[Quadrant, ...], ...] = Field(
        ..., description="Faces of the plane map as orbits of quadrants"
    )


def slot_partners(crossings: Sequence[PDTuple]) -> dict[Quadrant, Quadrant]:
    """Map each crossing slot to the slot at the other end of its arc."""
    occurrences: dict[int, list[Quadrant]] = {}
    for index, crossing in enumerate(crossings):
        for slot, arc in enumerate(crossing):
            occurrences.setdefault(arc, []).append((index, slot))
    partners: dict[Quadrant, Quadrant] = {}
    for ends in occurrences.values():
        first, second = ends
        partners[first] = second
        partners[second] = first
    return partners


def trace_faces(crossings: Sequence[PDTuple]) -> list[tuple[Quadrant, ...]]:
    """
    Trace the faces of the 4-valent plane graph.

    Quadrant (c, q) sits between slots q and q+1 of crossing c. Following the
    arc at slot q+1 to its far end (c', p') lands in quadrant (c', p') of the
    same face.
    """
    partners = slot_partners(crossings)
    seen: set[Quadrant] = set()
    faces: list[tuple[Quadrant, ...]] = []
    for index in range(len(crossings)):
        for quadrant in range(4):
            start = (index, quadrant)
            if start in seen:
                continue
            orbit: list[Quadrant] = []
            current = start
            while current not in seen:
                seen.add(current)
                orbit.append(current)
                crossing, q = current
                current = partners[(crossing, (q + 1) % 4)]
            faces.append(tuple(orbit))
    return faces


def _orient(crossings: tuple[PDTuple, ...], unknots: int) -> Orientation:
    if not crossings and unknots == 0:
        raise InvalidDiagramError("diagram is empty")

    occurrences: dict[int, list[Quadrant]] = {}
    for index, crossing in enumerate(crossings):
        for slot, arc in enumerate(crossing):
            if arc < 1:
                raise InvalidDiagramError(
                    f"arc labels must be positive integers, got {arc}", crossing=index
                )
            occurrences.setdefault(arc, []).append((index, slot))
    for arc, ends in sorted(occurrences.items()):
        if len(ends) != 2:
            raise InvalidDiagramError(
                f"arc {arc} appears {len(ends)} times, expected 2",
                crossing=ends[-1][0],
                details={"arc": arc},
            )

    strands = UnionFind(occurrences)
    for a, b, c, d in crossings:
        strands.union(a, c)
        strands.union(b, d)
    ranges: list[tuple[int, int]] = []
    for group in strands.to_sets():
        lo, hi = min(group), max(group)
        if len(group) != hi - lo + 1:
            raise InvalidDiagramError(
                f"component arcs {sorted(group)} do not form a contiguous range"
            )
        if lo == hi:
            raise InvalidDiagramError(f"component made of the single arc {lo} cannot close up")
        ranges.append((lo, hi))
    ranges.sort()
    bounds = {arc: (lo, hi) for lo, hi in ranges for arc in range(lo, hi + 1)}

    def successor(arc: int) -> int:
        lo, hi = bounds[arc]
        return lo if arc == hi else arc + 1

    heads: dict[int, Quadrant] = {}
    tails: dict[int, Quadrant] = {}

    def mark(table: dict[int, Quadrant], kind: str, arc: int, end: Quadrant) -> None:
        if arc in table:
            raise InvalidDiagramError(
                f"arc {arc} has two {kind}s, its cyclic sequence is not realizable",
                crossing=end[0],
                details={"arc": arc},
            )
        table[arc] = end

    signs = [0] * len(crossings)
    pending: list[int] = []
    for index, (a, b, c, d) in enumerate(crossings):
        if successor(a) != c:
            raise InvalidDiagramError(
                f"under strand {a} -> {c} does not follow the arc numbering", crossing=index
            )
        mark(heads, "head", a, (index, 0))
        mark(tails, "tail", c, (index, 2))
        enters_at_three = successor(d) == b
        enters_at_one = successor(b) == d
        if enters_at_three and enters_at_one:
            pending.append(index)
        elif enters_at_three:
            signs[index] = 1
        elif enters_at_one:
            signs[index] = -1
        else:
            raise InvalidDiagramError(
                f"over strand arcs {b} and {d} are not consecutive", crossing=index
            )

    def mark_over(index: int, sign: int) -> None:
        _, b, _, d = crossings[index]
        if sign > 0:
            mark(heads, "head", d, (index, 3))
            mark(tails, "tail", b, (index, 1))
        else:
            mark(heads, "head", b, (index, 1))
            mark(tails, "tail", d, (index, 3))

    for index, sign in enumerate(signs):
        if sign:
            mark_over(index, sign)

    # Two-arc components read the same in both directions; settle them from
    # the ends already fixed elsewhere.
    while pending:
        progress = False
        for index in list(pending):
            _, b, _, d = crossings[index]
            positive = b in heads or d in tails
            negative = d in heads or b in tails
            if positive and negative:
                raise InvalidDiagramError(
                    "over strand orientation is inconsistent", crossing=index
                )
            if positive or negative:
                signs[index] = 1 if positive else -1
                mark_over(index, signs[index])
                pending.remove(index)
                progress = True
        if not progress:
            # A two-arc component that only passes over: its lowest arc runs
            # into the lower-indexed of its two crossings.
            _, b, _, d = crossings[pending[0]]
            index, slot = min(occurrences[min(b, d)])
            signs[index] = 1 if slot == 3 else -1
            mark_over(index, signs[index])
            pending.remove(index)

    joined = UnionFind(range(len(crossings)))
    for ends in occurrences.values():
        joined.union(ends[0][0], ends[1][0])
    parts = sorted(tuple(sorted(group)) for group in joined.to_sets())

    faces = trace_faces(crossings)
    part_of = {index: n for n, part in enumerate(parts) for index in part}
    face_counts = [0] * len(parts)
    for face in faces:
        face_counts[part_of[face[0][0]]] += 1
    for part, count in zip(parts, face_counts, strict=True):
        if count != len(part) + 2:
            raise NonPlanarDiagramError(
                f"split part with {len(part)} crossings has {count} faces, "
                f"a plane diagram has {len(part) + 2}",
                crossing=part[0],
            )

    return Orientation(
        signs=tuple(signs),
        components=tuple(ranges),
        heads=heads,
        tails=tails,
        split_parts=tuple(parts),
        faces=tuple(faces),
    )


@lru_cache(maxsize=4096)
def orientation_of(diagram: LinkDiagram) -> Orientation:
    """Validate a diagram and return its orientation data (memoized)."""
    return _orient(diagram.crossings, diagram.unknots)


class LinkDiagram(BaseModel):
    """
    An oriented link diagram.

    Crossingless components are carried as a count of unknot circles rather
    than as empty PD lists.
    """

    model_config = ConfigDict(frozen=True)

    crossings: tuple[PDTuple, ...] = Field(
        default=(), description="PD tuples, counterclockwise from the incoming under arc"
    )
    unknots: int = Field(default=0, ge=0, description="Crossingless unknot components")

    @model_validator(mode="after")
    def validate_structure(self) -> LinkDiagram:
        """Reject crossing data that is not an oriented plane diagram."""
        orientation_of(self)
        return self

    @property
    def orientation(self) -> Orientation:
        return orientation_of(self)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({arc for crossing in self.crossings for arc in crossing}))

    @property
    def signs(self) -> tuple[int, ...]:
        return self.orientation.signs

    @property
    def component_count(self) -> int:
        return len(self.orientation.components) + self.unknots

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1

    @property
    def split_part_count(self) -> int:
        return len(self.orientation.split_parts) + self.unknots

    @property
    def is_split(self) -> bool:
        return self.split_part_count > 1

    def successor(self, arc: int) -> int:
        """Arc following ``arc`` along its component."""
        for lo, hi in self.orientation.components:
            if lo <= arc <= hi:
                return lo if arc == hi else arc + 1
        raise UnknownArcError(arc)

    def head(self, arc: int) -> Quadrant:
        """(crossing, slot) where ``arc`` ends."""
        try:
            return self.orientation.heads[arc]
        except KeyError:
            raise UnknownArcError(arc) from None

    def tail(self, arc: int) -> Quadrant:
        """(crossing, slot) where ``arc`` starts."""
        try:
            return self.orientation.tails[arc]
        except KeyError:
            raise UnknownArcError(arc) from None

    def check_crossing(self, crossing: int) -> None:
        if not 0 <= crossing < len(self.crossings):
            raise UnknownCrossingError(crossing, len(self.crossings))

    def __str__(self) -> str:
        from floerwidth.diagram.parser import format_pd

        return format_pd(self)


def crossing_signs(diagram: LinkDiagram) -> tuple[int, ...]:
    """Sign (+1 or -1) of every crossing, by crossing index."""
    return diagram.signs


def split_components(diagram: LinkDiagram) -> list[LinkDiagram]:
    """Non-split parts in crossing order, followed by one diagram per unknot circle."""
    parts = [
        LinkDiagram(crossings=tuple(diagram.crossings[i] for i in part))
        for part in diagram.orientation.split_parts
    ]
    parts.extend(LinkDiagram(unknots=1) for _ in range(diagram.unknots))
    return parts


def disjoint_union(diagrams: Iterable[LinkDiagram]) -> LinkDiagram:
    """Place diagrams side by side, shifting each one's labels past the largest label so far."""
    crossings: list[PDTuple] = []
    unknots = 0
    offset = 0
    for diagram in diagrams:
        if diagram.crossings:
            crossings.extend(
                (a + offset, b + offset, c + offset, d + offset)
                for a, b, c, d in diagram.crossings
            )
            offset = max(max(t) for t in crossings)
        unknots += diagram.unknots
    return LinkDiagram(crossings=tuple(crossings), unknots=unknots)


def _with_heads(
    crossings: Sequence[PDTuple], unknots: int, heads: dict[int, Quadrant]
) -> LinkDiagram:
    """
    Build a diagram whose two-arc components end where ``heads`` says.

    Labels are kept, except that the two labels of a component whose direction
    the numbering cannot express are swapped when the default reads it backwards.
    """
    diagram = LinkDiagram(crossings=tuple(crossings), unknots=unknots)
    swap: dict[int, int] = {}
    for lo, hi in diagram.orientation.components:
        if hi == lo + 1 and diagram.head(lo) != heads[lo]:
            swap.update({lo: hi, hi: lo})
    if not swap:
        return diagram
    swapped = tuple(
        (swap.get(a, a), swap.get(b, b), swap.get(c, c), swap.get(d, d))
        for a, b, c, d in crossings
    )
    return LinkDiagram(crossings=swapped, unknots=unknots)


def change_crossing(diagram: LinkDiagram, crossing: int) -> LinkDiagram:
    """Swap over and under at one crossing, keeping crossing indices and orientation."""
    diagram.check_crossing(crossing)
    a, b, c, d = diagram.crossings[crossing]
    # The new incoming under arc is the old incoming over arc.
    shift = 1 if diagram.signs[crossing] > 0 else -1
    changed: PDTuple = (d, a, b, c) if shift > 0 else (b, c, d, a)
    crossings = list(diagram.crossings)
    crossings[crossing] = changed
    heads: dict[int, Quadrant] = {}
    for arc, (index, slot) in diagram.orientation.heads.items():
        heads[arc] = (index, (slot + shift) % 4) if index == crossing else (index, slot)
    return _with_heads(crossings, diagram.unknots, heads)


def reverse_components(
    diagram: LinkDiagram, components: Iterable[int] | None = None
) -> LinkDiagram:
    """
    Reverse the orientation of the given components (all of them by default).

    Components are indexed in order of their lowest arc label.
    """
    ranges = diagram.orientation.components
    chosen = set(range(len(ranges)) if components is None else components)
    unknown = chosen - set(range(len(ranges)))
    if unknown:
        raise InvalidDiagramError(f"no components with indices {sorted(unknown)}")
    flipped = {
        arc: lo + hi - arc
        for n, (lo, hi) in enumerate(ranges)
        if n in chosen
        for arc in range(lo, hi + 1)
    }

    def relabel(arc: int) -> int:
        return flipped.get(arc, arc)

    crossings: list[PDTuple] = []
    rotated: set[int] = set()
    for index, (a, b, c, d) in enumerate(diagram.crossings):
        if a in flipped:
            a, b, c, d = c, d, a, b
            rotated.add(index)
        crossings.append((relabel(a), relabel(b), relabel(c), relabel(d)))

    heads: dict[int, Quadrant] = {}
    for arc in diagram.orientation.heads:
        index, slot = diagram.tail(arc) if arc in flipped else diagram.head(arc)
        heads[relabel(arc)] = (index, (slot + 2) % 4 if index in rotated else slot)
    return _with_heads(crossings, diagram.unknots, heads)


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    """Change every crossing."""
    mirrored = diagram
    for crossing in range(diagram.crossing_count):
        mirrored = change_crossing(mirrored, crossing)
    return mirrored
