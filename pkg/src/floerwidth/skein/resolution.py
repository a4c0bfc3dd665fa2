"""Crossing resolutions and skein quadruples."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.types import Quadrant, ResolutionKind, Splicing
from floerwidth.diagram.model import LinkDiagram, change_crossing
from floerwidth.diagram.wiring import close_up


def splicing_for(sign: int, kind: ResolutionKind) -> Splicing:
    """Zero is the A-splicing at a positive crossing and the B-splicing at a negative one."""
    positive = sign > 0
    if kind is ResolutionKind.ZERO:
        return Splicing.A if positive else Splicing.B
    return Splicing.B if positive else Splicing.A


def splice_crossing(diagram: LinkDiagram, crossing: int, choice: Splicing) -> LinkDiagram:
    """
    Smooth one crossing and renumber the rest.

    Orientation is kept wherever the smoothing allows it; arcs closed up into
    crossingless circles become unknot components.
    """
    diagram.check_crossing(crossing)
    removed = diagram.crossings[crossing]
    kept = [index for index in range(diagram.crossing_count) if index != crossing]
    incoming: set[Quadrant] = {
        (new, slot)
        for new, old in enumerate(kept)
        for slot in range(4)
        if diagram.head(diagram.crossings[old][slot]) == (old, slot)
    }
    return close_up(
        [diagram.crossings[index] for index in kept],
        [(removed[first], removed[second]) for first, second in choice.slot_pairs],
        diagram.arcs,
        unknots=diagram.unknots,
        incoming=incoming,
    )


def resolve(diagram: LinkDiagram, crossing: int, kind: ResolutionKind) -> LinkDiagram:
    """L0 or L-infinity of ``diagram`` at ``crossing``."""
    diagram.check_crossing(crossing)
    return splice_crossing(diagram, crossing, splicing_for(diagram.signs[crossing], kind))


class SkeinQuadruple(BaseModel):
    """The four diagrams of a skein relation at one site."""

    model_config = ConfigDict(frozen=True)

    site: int = Field(..., description="Crossing index, shared by L+ and L-")
    plus: LinkDiagram
    minus: LinkDiagram
    zero: LinkDiagram
    infinity: LinkDiagram

    @classmethod
    def at(cls, diagram: LinkDiagram, crossing: int) -> SkeinQuadruple:
        """Quadruple containing ``diagram`` as L+ or L-, whichever matches the crossing sign."""
        diagram.check_crossing(crossing)
        changed = change_crossing(diagram, crossing)
        plus, minus = (diagram, changed) if diagram.signs[crossing] > 0 else (changed, diagram)
        return cls(
            site=crossing,
            plus=plus,
            minus=minus,
            zero=resolve(plus, crossing, ResolutionKind.ZERO),
            infinity=resolve(plus, crossing, ResolutionKind.INFINITY),
        )

    def diagrams(self) -> dict[str, LinkDiagram]:
        return {
            "L_plus": self.plus,
            "L_minus": self.minus,
            "L_zero": self.zero,
            "L_infinity": self.infinity,
        }
