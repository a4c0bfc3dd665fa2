"""Export formats."""

from floerwidth.export.dot import DotRenderer, get_renderer, ribbon_to_dot, tait_to_dot

__all__ = ["DotRenderer", "get_renderer", "ribbon_to_dot", "tait_to_dot"]
