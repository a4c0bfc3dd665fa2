"""Shared enumerations and type aliases for floerwidth."""

from __future__ import annotations

from enum import Enum

# A PD crossing: four arc labels counterclockwise from the incoming under arc.
PDTuple = tuple[int, int, int, int]

# A crossing corner: (crossing index, quadrant 0..3). Quadrant q lies between
# slot q and slot q+1 counterclockwise.
Quadrant = tuple[int, int]


class Splicing(str, Enum):
    """The two smoothings of a crossing."""

    A = "A"  # joins slots (0,1) and (2,3)
    B = "B"  # joins slots (1,2) and (3,0)

    @property
    def slot_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Slot pairs joined by this smoothing."""
        if self is Splicing.A:
            return ((0, 1), (2, 3))
        return ((1, 2), (3, 0))

    def partner_slot(self, slot: int) -> int:
        """Slot joined to ``slot`` by this smoothing."""
        for first, second in self.slot_pairs:
            if slot == first:
                return second
            if slot == second:
                return first
        raise ValueError(f"slot must be 0..3, got {slot}")

    @property
    def other(self) -> Splicing:
        return Splicing.B if self is Splicing.A else Splicing.A


class FaceColor(str, Enum):
    """Checkerboard colors."""

    BLACK = "black"
    WHITE = "white"

    @property
    def other(self) -> FaceColor:
        return FaceColor.WHITE if self is FaceColor.BLACK else FaceColor.BLACK


class EdgeLetter(str, Enum):
    """Tait edge letter; alpha at positive crossings, beta at negative ones."""

    ALPHA = "α"
    BETA = "β"


class ResolutionKind(str, Enum):
    """Skein resolutions of an oriented crossing."""

    ZERO = "zero"
    INFINITY = "infinity"


class CheckName(str, Enum):
    """Verification suites run by ``floerwidth verify``."""

    MARKED_EDGE_INVARIANCE = "marked-edge-invariance"
    ETA_IDENTITY = "eta-identity"
    WIDTH_GENUS = "width-genus"
    CROSSING_CHANGE = "crossing-change"
    GENUS_CHANGE = "genus-change"
    SKEIN = "skein"
    EULER_CHAR_SYMMETRY = "euler-char-symmetry"
    STATE_COUNT_ORACLE = "state-count-oracle"
