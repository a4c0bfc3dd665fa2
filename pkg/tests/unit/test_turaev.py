"""Unit tests for splicings, ribbon graphs and the Turaev genus."""

from __future__ import annotations

import pytest

from floerwidth.core.exceptions import InvariantViolationError, SplitDiagramError
from floerwidth.core.types import Splicing
from floerwidth.diagram.model import change_crossing
from floerwidth.diagram.parser import parse_pd
from floerwidth.skein.normalized import normalized_genus
from floerwidth.tait.graphs import labeled_tait_graphs
from floerwidth.turaev.genus import (
    bouquet_reduce,
    component_genera,
    euler_characteristic,
    predict_genus_change,
    turaev_genus_diagram,
    turaev_report,
)
from floerwidth.turaev.ribbon import RibbonGraph, boundary_walks, ribbon_graph
from floerwidth.turaev.splicing import splice_all


class TestSplicing:
    """Tests for the all-A and all-B states."""

    @pytest.mark.parametrize(
        ("fixture", "circles_a", "circles_b"),
        [("trefoil", 2, 3), ("knot_8_19", 3, 5), ("knot_9_46", 4, 5), ("kink", 2, 1)],
    )
    def test_circle_counts(self, request, fixture, circles_a, circles_b):
        """Test circle counts of both splicings."""
        diagram = request.getfixturevalue(fixture)
        assert splice_all(diagram, Splicing.A).circle_count == circles_a
        assert splice_all(diagram, Splicing.B).circle_count == circles_b

    def test_unknot(self, unknot):
        """Test a crossingless circle survives both splicings."""
        for choice in Splicing:
            state = splice_all(unknot, choice)
            assert state.circles == ()
            assert state.circle_count == 1

    def test_extra_unknots_are_counted(self):
        """Test unknot components add one circle each."""
        diagram = parse_pd("BR[1,1,1]+U+U")
        assert splice_all(diagram, Splicing.A).circle_count == 4

    def test_every_segment_on_one_circle(self, knot_8_19):
        """Test each crossing contributes two segments to the state."""
        state = splice_all(knot_8_19, Splicing.A)
        segments = [segment for circle in state.circles for segment in circle.segments]
        assert sorted(segments) == [(c, side) for c in range(8) for side in (0, 1)]
        assert all(state.circle_of(segment) in range(3) for segment in segments)
        with pytest.raises(KeyError):
            state.circle_of((8, 0))


class TestRibbonGraph:
    """Tests for ribbon graphs and boundary walks."""

    def test_planar_loop(self):
        """Test a single loop bounds two faces."""
        assert len(boundary_walks((((0, 0), (0, 1)),))) == 2

    def test_single_edge(self):
        """Test an edge between two vertices bounds one face."""
        assert len(boundary_walks((((0, 0),), ((0, 1),)))) == 1

    def test_interlaced_loops_on_torus(self):
        """Test two interlaced loops at one vertex give genus one."""
        graph = RibbonGraph(
            choice=Splicing.A,
            rotation=(((0, 0), (1, 0), (0, 1), (1, 1)),),
            edge_count=2,
        )
        assert graph.face_count == 1
        assert graph.genus == 1

    def test_odd_euler_characteristic(self):
        """Test an inconsistent ribbon graph is rejected."""
        graph = RibbonGraph(choice=Splicing.A, rotation=((), ()), edge_count=1)
        with pytest.raises(InvariantViolationError):
            _ = graph.genus

    def test_8_19(self, knot_8_19):
        """Test D(A) and D(B) lie on the same torus."""
        d_a = ribbon_graph(knot_8_19, Splicing.A)
        d_b = ribbon_graph(knot_8_19, Splicing.B)
        assert (d_a.vertex_count, d_a.face_count, d_a.genus) == (3, 5, 1)
        assert (d_b.vertex_count, d_b.face_count, d_b.genus) == (5, 3, 1)

    def test_alternating_is_planar(self, trefoil, figure_eight):
        """Test genus zero for reduced alternating diagrams."""
        for diagram in (trefoil, figure_eight):
            for choice in Splicing:
                assert ribbon_graph(diagram, choice).genus == 0

    def test_unknot(self, unknot):
        """Test one vertex and one face."""
        graph = ribbon_graph(unknot, Splicing.B)
        assert graph.euler_characteristic == 2

    def test_split_diagram_rejected(self):
        """Test ribbon graphs need a non-split diagram."""
        with pytest.raises(SplitDiagramError):
            ribbon_graph(parse_pd("BR[1,1,1]+U"), Splicing.A)


class TestBouquetReduction:
    """Tests for deleting and contracting Tait graph edges."""

    def test_trefoil(self, trefoil):
        """Test V and F of the trefoil."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        assert bouquet_reduce(t1, 1).circles == 2
        assert bouquet_reduce(t2, -1).circles == 3

    def test_8_19(self, knot_8_19):
        """Test V and F of 8_19."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        assert bouquet_reduce(t1, 1).circles == 3
        assert bouquet_reduce(t2, -1).circles == 5

    def test_kink(self, kink):
        """Test the loop is kept and the single edge contracted."""
        _, t1, t2 = labeled_tait_graphs(kink)
        looped = t1 if t1.vertex_count == 1 else t2
        single = t2 if looped is t1 else t1
        assert bouquet_reduce(looped, 1).model_dump() == {"vertices": 1, "loops": 1}
        assert bouquet_reduce(single, -1).model_dump() == {"vertices": 1, "loops": 0}

    def test_nothing_kept(self, trefoil):
        """Test every vertex survives when no edge has the kept sign."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        for graph in (t1, t2):
            negative = [edge for edge in graph.edges if not edge.is_positive]
            if len(negative) == len(graph.edges):
                bouquet = bouquet_reduce(graph, 1)
                assert (bouquet.vertices, bouquet.loops) == (graph.vertex_count, 0)


class TestTuraevGenus:
    """Tests for the genus, Euler characteristic and report."""

    @pytest.mark.parametrize(
        ("fixture", "genus"),
        [
            ("unknot", 0),
            ("kink", 0),
            ("trefoil", 0),
            ("figure_eight", 0),
            ("hopf_link", 0),
            ("knot_8_19", 1),
            ("knot_9_46", 1),
        ],
    )
    def test_genus(self, request, fixture, genus):
        """Test the genus of small diagrams."""
        assert turaev_genus_diagram(request.getfixturevalue(fixture)) == genus

    def test_flip_colors(self, knot_8_19):
        """Test the genus does not depend on the checkerboard coloring."""
        assert turaev_genus_diagram(knot_8_19, flip_colors=True) == 1

    def test_split_diagram(self):
        """Test a split diagram sums the genera of its parts."""
        diagram = parse_pd("BR[1,1,1]+U")
        assert euler_characteristic(diagram) == 4
        assert turaev_genus_diagram(diagram) == 0
        assert normalized_genus(diagram) == -1
        assert component_genera(diagram) == [0, 0]

    def test_split_diagram_with_genus(self, pd_8_19):
        """Test the genus of 8_19 beside a trefoil."""
        diagram = parse_pd(f"{pd_8_19}+BR[1,1,1]")
        assert turaev_genus_diagram(diagram) == 1
        assert normalized_genus(diagram) == 0

    def test_component_genera(self, pd_8_19):
        """Test one genus per split part."""
        assert sorted(component_genera(parse_pd(f"{pd_8_19}+BR[1,1,1]"))) == [0, 1]

    def test_crossing_change(self, trefoil):
        """Test the predicted change at a trefoil crossing."""
        assert predict_genus_change(trefoil, 0) == 1
        changed = change_crossing(trefoil, 0)
        assert turaev_genus_diagram(changed) == 1
        assert predict_genus_change(changed, 0) == -1

    def test_report(self, knot_8_19):
        """Test the cellulation summary of 8_19."""
        report = turaev_report(knot_8_19)
        assert (report.vertices, report.edges, report.faces, report.chi) == (3, 8, 5, 0)
        assert report.genus == (1,)
        assert (report.circles_a, report.circles_b) == (3, 5)
        assert report.to_json_dict() == {
            "E": 8,
            "F": 5,
            "V": 3,
            "chi": 0,
            "circles_A": 3,
            "circles_B": 5,
            "genus": [1],
        }

    def test_report_9_46(self, knot_9_46):
        """Test V, E and F of the pretzel 9_46."""
        report = turaev_report(knot_9_46)
        assert (report.vertices, report.edges, report.faces) == (4, 9, 5)
