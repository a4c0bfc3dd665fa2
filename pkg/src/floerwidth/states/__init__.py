"""Kauffman states, their bigradings and the diagram width."""

from floerwidth.states.enumeration import (
    KauffmanState,
    build_state,
    enumerate_states,
    iter_states,
    spanning_trees,
)
from floerwidth.states.gradings import (
    GradingTableValidator,
    LocalGradingTable,
    get_grading_table,
    load_grading_table,
)
from floerwidth.states.width import (
    BigradingEntry,
    BigradingTable,
    ExtremalEdges,
    bigrading_table,
    diagram_states,
    eta,
    graded_euler_characteristic,
    is_symmetric,
    lemma_extremal_edges,
    predict_width_change,
    state_edges,
    state_gradings,
    width,
)

__all__ = [
    "BigradingEntry",
    "BigradingTable",
    "ExtremalEdges",
    "GradingTableValidator",
    "KauffmanState",
    "LocalGradingTable",
    "bigrading_table",
    "build_state",
    "diagram_states",
    "enumerate_states",
    "eta",
    "get_grading_table",
    "graded_euler_characteristic",
    "is_symmetric",
    "iter_states",
    "lemma_extremal_edges",
    "load_grading_table",
    "predict_width_change",
    "spanning_trees",
    "state_edges",
    "state_gradings",
    "width",
]
