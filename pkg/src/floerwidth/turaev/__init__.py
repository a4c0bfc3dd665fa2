"""Splicing states, ribbon graphs and the genus of the Turaev surface."""

from floerwidth.turaev.genus import (
    Bouquet,
    PartGenus,
    TuraevReport,
    bouquet_reduce,
    component_genera,
    euler_characteristic,
    predict_genus_change,
    turaev_genus_diagram,
    turaev_report,
)
from floerwidth.turaev.ribbon import RibbonGraph, boundary_walks, ribbon_graph
from floerwidth.turaev.splicing import Circle, HalfEdge, SplicingState, splice_all

__all__ = [
    "Bouquet",
    "Circle",
    "HalfEdge",
    "PartGenus",
    "RibbonGraph",
    "SplicingState",
    "TuraevReport",
    "boundary_walks",
    "bouquet_reduce",
    "component_genera",
    "euler_characteristic",
    "predict_genus_change",
    "ribbon_graph",
    "splice_all",
    "turaev_genus_diagram",
    "turaev_report",
]
