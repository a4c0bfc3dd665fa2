"""Checkerboard graphs of link diagrams."""

from floerwidth.tait.graphs import (
    CycleConditions,
    TaitEdge,
    TaitGraph,
    crossing_change,
    cycle_conditions,
    dual_edge,
    in_monochrome_cycle,
    is_alternating,
    is_monochrome,
    label_edges,
    labeled_tait_graphs,
    spanning_tree_count,
    tait_graphs,
)

__all__ = [
    "CycleConditions",
    "TaitEdge",
    "TaitGraph",
    "crossing_change",
    "cycle_conditions",
    "dual_edge",
    "in_monochrome_cycle",
    "is_alternating",
    "is_monochrome",
    "label_edges",
    "labeled_tait_graphs",
    "spanning_tree_count",
    "tait_graphs",
]
