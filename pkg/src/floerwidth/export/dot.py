"""Graphviz DOT rendering of Tait graphs and ribbon graphs."""

from __future__ import annotations

from typing import Any

from jinja2 import BaseLoader, Environment, StrictUndefined, TemplateError

from floerwidth.core.exceptions import ExportError
from floerwidth.core.types import FaceColor
from floerwidth.diagram.model import LinkDiagram
from floerwidth.observability.logging import get_logger
from floerwidth.tait.graphs import TaitGraph
from floerwidth.turaev.ribbon import RibbonGraph

logger = get_logger(__name__)

TAIT_TEMPLATE = """\
graph {{ name }} {
  // {{ color }} faces of {{ pd }}
  node [shape=circle];
{% for vertex in vertices %}
  {{ vertex }};
{% endfor %}
{% for edge in edges %}
  {{ edge.ends[0] }} -- {{ edge.ends[1] }} [label="{{ edge.label }}", key={{ edge.crossing }}];
{% endfor %}
}
"""

RIBBON_TEMPLATE = """\
graph {{ name }} {
  // all-{{ choice }} ribbon graph of {{ pd }}; port order is the rotation
  node [shape=record];
{% for record in records %}
  v{{ loop.index0 }} [label="{{ record }}"];
{% endfor %}
{% for edge in edges %}
  {{ edge.first }} -- {{ edge.second }} [label="{{ edge.crossing }}"];
{% endfor %}
}
"""


class DotRenderer:
    """Renders graphs to DOT text through Jinja2 templates."""

    def __init__(self) -> None:
        self._env = Environment(
            loader=BaseLoader(),
            undefined=StrictUndefined,
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def _render(self, template: str, name: str, context: dict[str, Any]) -> str:
        try:
            return self._env.from_string(template).render(**context)
        except TemplateError as e:
            raise ExportError(f"Failed to render DOT: {e}", template_name=name) from e

    def tait(self, graph: TaitGraph, diagram: LinkDiagram, name: str | None = None) -> str:
        """Vertex names are face indices; edge labels are alpha/beta with their sign."""
        return self._render(
            TAIT_TEMPLATE,
            "tait",
            {
                "name": name or ("T1" if graph.color is FaceColor.BLACK else "T2"),
                "color": graph.color.value,
                "pd": str(diagram),
                "vertices": graph.vertices,
                "edges": graph.edges,
            },
        )

    def ribbon(self, graph: RibbonGraph, diagram: LinkDiagram, name: str | None = None) -> str:
        """Each vertex is a record whose ports follow the rotation, labeled by crossing."""
        port_of: dict[tuple[int, int], str] = {}
        records: list[str] = []
        for vertex, half_edges in enumerate(graph.rotation):
            fields = []
            for port, (crossing, side) in enumerate(half_edges):
                port_of[(crossing, side)] = f"v{vertex}:p{port}"
                fields.append(f"<p{port}>{crossing}")
            records.append("|".join(fields))
        edges = [
            {
                "crossing": crossing,
                "first": port_of[(crossing, 0)],
                "second": port_of[(crossing, 1)],
            }
            for crossing in range(graph.edge_count)
        ]
        logger.debug("Rendering ribbon graph", vertices=graph.vertex_count, edges=len(edges))
        return self._render(
            RIBBON_TEMPLATE,
            "ribbon",
            {
                "name": name or f"D{graph.choice.value}",
                "choice": graph.choice.value,
                "pd": str(diagram),
                "records": records,
                "edges": edges,
            },
        )


_renderer: DotRenderer | None = None


def get_renderer() -> DotRenderer:
    global _renderer
    if _renderer is None:
        _renderer = DotRenderer()
    return _renderer


def tait_to_dot(graph: TaitGraph, diagram: LinkDiagram) -> str:
    return get_renderer().tait(graph, diagram)


def ribbon_to_dot(graph: RibbonGraph, diagram: LinkDiagram) -> str:
    return get_renderer().ribbon(graph, diagram)
