"""Link diagrams: PD parsing, orientation, plane maps and builders."""

from floerwidth.diagram.model import (
    LinkDiagram,
    change_crossing,
    crossing_signs,
    disjoint_union,
    mirror,
    reverse_components,
    split_components,
)
from floerwidth.diagram.parser import canonical_form, format_pd, parse_pd
from floerwidth.diagram.planar import PlaneMap, build_map
from floerwidth.diagram.wiring import (
    braid_closure,
    close_up,
    from_wiring,
    montesinos_knot,
    plat_closure,
    pretzel_knot,
    rational_knot,
)

__all__ = [
    "LinkDiagram",
    "PlaneMap",
    "braid_closure",
    "build_map",
    "canonical_form",
    "change_crossing",
    "close_up",
    "crossing_signs",
    "disjoint_union",
    "format_pd",
    "from_wiring",
    "mirror",
    "montesinos_knot",
    "parse_pd",
    "plat_closure",
    "pretzel_knot",
    "rational_knot",
    "reverse_components",
    "split_components",
]
