"""Unit tests for DOT export."""

from __future__ import annotations

import pytest

from floerwidth.core.exceptions import ExportError
from floerwidth.core.types import Splicing
from floerwidth.export.dot import DotRenderer, get_renderer, ribbon_to_dot, tait_to_dot
from floerwidth.tait.graphs import labeled_tait_graphs
from floerwidth.turaev.ribbon import ribbon_graph


class TestDotRenderer:
    """Tests for DotRenderer."""

    def test_tait_graphs(self, knot_8_19):
        """Test one DOT edge per crossing in both Tait graphs."""
        _, t1, t2 = labeled_tait_graphs(knot_8_19)
        first = tait_to_dot(t1, knot_8_19)
        second = tait_to_dot(t2, knot_8_19)
        assert first.startswith("graph T1 {")
        assert second.startswith("graph T2 {")
        assert first.count(" -- ") == 8
        assert second.count(" -- ") == 8
        assert first.rstrip().endswith("}")

    def test_tait_labels(self, trefoil):
        """Test edges carry their letter and sign."""
        _, t1, t2 = labeled_tait_graphs(trefoil)
        text = tait_to_dot(t1, trefoil) + tait_to_dot(t2, trefoil)
        assert 'label="α+"' in text
        assert 'label="α-"' in text

    def test_ribbon_graph(self, knot_8_19):
        """Test records and edges of D(A)."""
        graph = ribbon_graph(knot_8_19, Splicing.A)
        text = ribbon_to_dot(graph, knot_8_19)
        assert text.startswith("graph DA {")
        assert text.count(" -- ") == 8
        assert text.count("[shape=record]") == 1
        assert "v2 [label=" in text

    def test_custom_name(self, trefoil):
        """Test overriding the graph name."""
        _, t1, _ = labeled_tait_graphs(trefoil)
        assert DotRenderer().tait(t1, trefoil, name="black").startswith("graph black {")

    def test_shared_renderer(self):
        """Test the module-level renderer is reused."""
        assert get_renderer() is get_renderer()

    def test_render_failure(self):
        """Test template errors become ExportError."""
        with pytest.raises(ExportError) as exc_info:
            DotRenderer()._render("{{ missing }}", "broken", {})
        assert exc_info.value.template_name == "broken"
