"""Unit tests for Tait graphs and their labels."""

from __future__ import annotations

import pytest

from floerwidth.core.exceptions import UnknownCrossingError
from floerwidth.core.types import EdgeLetter, FaceColor
from floerwidth.diagram.model import change_crossing, mirror
from floerwidth.diagram.parser import parse_pd
from floerwidth.tait.graphs import (
    TaitEdge,
    crossing_change,
    cycle_conditions,
    dual_edge,
    in_monochrome_cycle,
    is_alternating,
    is_monochrome,
    labeled_tait_graphs,
    spanning_tree_count,
)


def _by_size(t1, t2):
    return (t1, t2) if t1.vertex_count < t2.vertex_count else (t2, t1)


class TestTaitGraphs:
    """Tests for the checkerboard graphs."""

    def test_one_edge_per_crossing_in_each_graph(self, knot_8_19):
        """Test that dual edges share crossing indices."""
        plane_map, t1, t2 = labeled_tait_graphs(knot_8_19)
        assert [e.crossing for e in t1.edges] == list(range(8))
        assert [e.crossing for e in t2.edges] == list(range(8))
        assert t1.vertex_count + t2.vertex_count == plane_map.face_count

    def test_colors(self, trefoil):
        """Test T1 is the black graph."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        assert t1.color is FaceColor.BLACK
        assert t2.color is FaceColor.WHITE

    def test_trefoil_graphs(self, trefoil):
        """Test a 3-cycle and a 2-vertex triple edge."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        theta, cycle = _by_size(t1, t2)
        assert theta.vertex_count == 2
        assert len(theta.edges) == 3
        assert not any(edge.is_loop for edge in theta.edges)
        assert cycle.vertex_count == 3
        assert len({edge.ends for edge in cycle.edges}) == 3

    def test_kink_graphs(self, kink):
        """Test a one-vertex loop and a single edge."""
        _, t1, t2 = labeled_tait_graphs(kink)
        looped, edge = _by_size(t1, t2)
        assert looped.vertex_count == 1
        assert looped.edges[0].is_loop
        assert edge.vertex_count == 2
        assert not edge.edges[0].is_loop

    def test_edge_lookup(self, trefoil):
        """Test edge() bounds."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        assert t1.edge(2).crossing == 2
        assert dual_edge(t1.edge(1), t2).crossing == 1
        with pytest.raises(UnknownCrossingError):
            t1.edge(3)

    def test_to_networkx_sign_filter(self, knot_8_19):
        """Test restricting the multigraph to one sign."""
        _, t1, _ = labeled_tait_graphs(knot_8_19)
        positive = sum(1 for edge in t1.edges if edge.is_positive)
        graph = t1.to_networkx(sign=1)
        assert graph.number_of_edges() == positive
        assert graph.number_of_nodes() == t1.vertex_count
        assert t1.to_networkx(without=0).number_of_edges() == 7


class TestLabels:
    """Tests for the alpha/beta letters and the edge signs."""

    def test_right_trefoil_labels(self, trefoil):
        """Test 3-cycle all alpha+, triple edge all alpha-."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        theta, cycle = _by_size(t1, t2)
        assert {edge.label for edge in cycle.edges} == {"α+"}
        assert {edge.label for edge in theta.edges} == {"α-"}

    def test_left_trefoil_labels(self, trefoil):
        """Test mirror: letters become beta and the signs swap graphs."""
        _, t1, t2 = labeled_tait_graphs(mirror(trefoil))
        theta, cycle = _by_size(t1, t2)
        assert {edge.label for edge in cycle.edges} == {"β-"}
        assert {edge.label for edge in theta.edges} == {"β+"}

    def test_letter_follows_crossing_sign(self, knot_9_46):
        """Test alpha exactly at positive crossings."""
        _, t1, t2 = labeled_tait_graphs(knot_9_46)
        for graph in (t1, t2):
            for edge in graph.edges:
                positive = knot_9_46.signs[edge.crossing] > 0
                assert edge.letter is (EdgeLetter.ALPHA if positive else EdgeLetter.BETA)

    def test_dual_edges_have_opposite_signs(self, knot_8_19):
        """Test that exactly one edge of each dual pair is positive."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        for first, second in zip(t1.edges, t2.edges, strict=True):
            assert first.sign == -second.sign

    def test_unlabeled_edge(self):
        """Test the placeholder label."""
        edge = TaitEdge(crossing=0, ends=(0, 1), quadrants=(0, 2))
        assert edge.label == "?"

    def test_alternating_graphs_are_monochrome(self, figure_eight, knot_8_19):
        """Test alternating diagrams have single-sign Tait graphs."""
        _, t1, t2 = labeled_tait_graphs(figure_eight)
        assert is_monochrome(t1)
        assert is_monochrome(t2)
        _, t1, _ = labeled_tait_graphs(knot_8_19)
        assert not is_monochrome(t1)

    def test_is_alternating(self, trefoil, figure_eight, knot_8_19, knot_9_46, kink):
        """Test the alternating predicate."""
        assert is_alternating(trefoil)
        assert is_alternating(figure_eight)
        assert is_alternating(kink)
        assert is_alternating(parse_pd("BR[1,1,1]+U"))
        assert not is_alternating(knot_8_19)
        assert not is_alternating(knot_9_46)


class TestCrossingChange:
    """Tests for relabeling under a crossing change."""

    def test_pair_switches_letter_and_sign(self, trefoil):
        """Test (alpha+, alpha-) becomes (beta-, beta+)."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        before = {t1.edge(0).label, t2.edge(0).label}
        c1, c2 = crossing_change(t1, t2, 0)
        after = {c1.edge(0).label, c2.edge(0).label}
        assert before == {"α+", "α-"}
        assert after == {"β-", "β+"}
        assert c1.edge(0).sign == -t1.edge(0).sign

    def test_other_edges_untouched(self, trefoil):
        """Test only the changed crossing is relabeled."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        c1, _ = crossing_change(t1, t2, 0)
        assert c1.edges[1:] == t1.edges[1:]

    def test_involution(self, knot_8_19):
        """Test changing the same crossing twice."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        for crossing in range(8):
            once = crossing_change(t1, t2, crossing)
            assert crossing_change(*once, crossing) == (t1, t2)

    def test_matches_relabeled_mirror(self, trefoil):
        """Test changing every crossing gives the labels of the mirror."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        for crossing in range(3):
            t1, t2 = crossing_change(t1, t2, crossing)
        _, m1, m2 = labeled_tait_graphs(mirror(trefoil))
        assert [e.label for e in t1.edges] == [e.label for e in m1.edges]
        assert [e.label for e in t2.edges] == [e.label for e in m2.edges]

    def test_matches_recomputed_graphs(self, knot_8_19):
        """Test against the Tait graphs of the changed diagram."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        for crossing in range(8):
            c1, c2 = crossing_change(t1, t2, crossing)
            _, r1, r2 = labeled_tait_graphs(change_crossing(knot_8_19, crossing))
            assert [e.label for e in c1.edges] == [e.label for e in r1.edges]
            assert [e.label for e in c2.edges] == [e.label for e in r2.edges]

    def test_unknown_crossing(self, trefoil):
        """Test an out-of-range crossing."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        with pytest.raises(UnknownCrossingError):
            crossing_change(t1, t2, 5)


class TestCycles:
    """Tests for monochrome cycles and the cycle conditions."""

    def test_loop_is_a_cycle(self, kink):
        """Test a loop edge of any sign."""
        _, t1, t2 = labeled_tait_graphs(kink)
        looped, single = _by_size(t1, t2)
        assert in_monochrome_cycle(looped, looped.edges[0])
        assert not in_monochrome_cycle(single, single.edges[0])

    def test_trefoil_edges_lie_on_cycles(self, trefoil):
        """Test both the 3-cycle and the parallel edges."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        for graph in (t1, t2):
            for edge in graph.edges:
                assert in_monochrome_cycle(graph, edge)

    def test_changed_edge_breaks_cycle(self, trefoil):
        """Test the 3-cycle after one of its edges changes sign."""
        _, t1, t2 = labeled_tait_graphs(change_crossing(trefoil, 0))
        _, cycle = _by_size(t1, t2)
        for edge in cycle.edges:
            assert not in_monochrome_cycle(cycle, edge)

    def test_cycle_conditions(self, trefoil):
        """Test both conditions hold at every trefoil crossing."""
        for crossing in range(3):
            conditions = cycle_conditions(trefoil, crossing)
            assert conditions.positive_edge.is_positive
            assert not conditions.negative_edge.is_positive
            assert conditions.positive_in_cycle
            assert conditions.negative_in_cycle
            assert conditions.predicted_change == 1

    def test_cycle_conditions_after_change(self, trefoil):
        """Test the reverse change: one condition fails."""
        changed = change_crossing(trefoil, 0)
        assert cycle_conditions(changed, 0).predicted_change == -1

    def test_cycle_conditions_on_split_diagram(self):
        """Test that a crossing is looked up in its own split part."""
        diagram = parse_pd("U+BR[1,1,1]")
        assert cycle_conditions(diagram, 1).predicted_change == 1
        with pytest.raises(UnknownCrossingError):
            cycle_conditions(diagram, 3)


class TestSpanningTreeCount:
    """Tests for the matrix-tree count."""

    def test_trefoil(self, trefoil):
        """Test a 3-cycle and a triple edge both have 3 spanning trees."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        assert spanning_tree_count(t1) == 3
        assert spanning_tree_count(t2) == 3

    def test_8_19(self, knot_8_19):
        """Test 27 for both graphs."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        assert spanning_tree_count(t1) == 27
        assert spanning_tree_count(t2) == 27

    def test_kink(self, kink):
        """Test loops are ignored."""
        _, t1, t2 = labeled_tait_graphs(kink)
        assert spanning_tree_count(t1) == 1
        assert spanning_tree_count(t2) == 1

    @pytest.mark.parametrize(
        ("notation", "determinant"),
        [("C[3]", 3), ("C[2,2]", 5), ("C[5]", 5), ("C[3,2]", 7), ("C[4,2]", 9), ("C[3,1,2]", 11)],
    )
    def test_determinants(self, notation, determinant):
        """Test counts of 2-bridge knots against their determinants."""
        _, t1, _ = labeled_tait_graphs(parse_pd(notation))
        assert spanning_tree_count(t1) == determinant
