"""Exception hierarchy for floerwidth."""

from __future__ import annotations

from typing import Any


class FloerWidthError(Exception):
    """Base exception for all floerwidth errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} - {self.details}"
        return self.message


# Configuration Errors
class ConfigurationError(FloerWidthError):
    """Error in configuration."""

    pass


class ValidationError(ConfigurationError):
    """Validation error for catalog entries or data files."""

    pass


class GradingTableError(ConfigurationError):
    """The local Alexander/Maslov contribution table failed its self-check."""

    def __init__(self, reason: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(f"Invalid local grading table: {reason}", details)
        self.reason = reason


# Diagram Errors
class DiagramError(FloerWidthError):
    """Base error for unusable diagram input."""

    pass


class DiagramParseError(DiagramError):
    """Diagram text could not be parsed."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        super().__init__(
            f"Parse error at position {position}: {reason}",
            {"position": position, "reason": reason, "text": text},
        )
        self.position = position
        self.reason = reason


class InvalidDiagramError(DiagramError):
    """Crossing data does not describe an oriented link diagram."""

    def __init__(
        self,
        reason: str,
        crossing: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        info: dict[str, Any] = dict(details or {})
        info["reason"] = reason
        if crossing is not None:
            info["crossing"] = crossing
        super().__init__(f"Invalid diagram: {reason}", info)
        self.reason = reason
        self.crossing = crossing


class NonPlanarDiagramError(InvalidDiagramError):
    """Crossing data has no consistent plane embedding."""

    pass


class SplitDiagramError(DiagramError):
    """Operation needs a non-split diagram with at least one crossing."""

    def __init__(self, parts: int, crossings: int) -> None:
        super().__init__(
            "Operation requires a non-split diagram with at least one crossing",
            {"split_parts": parts, "crossings": crossings},
        )


class NotAKnotError(DiagramError):
    """Gradings are only defined for single-component diagrams."""

    def __init__(self, components: int) -> None:
        super().__init__(
            f"Kauffman state gradings need a knot diagram, got {components} components",
            {"components": components},
        )
        self.components = components


class UnknownArcError(DiagramError):
    """Arc label not present in the diagram."""

    def __init__(self, arc: int) -> None:
        super().__init__(f"Arc {arc} is not part of the diagram", {"arc": arc})
        self.arc = arc


class UnknownCrossingError(DiagramError):
    """Crossing index out of range."""

    def __init__(self, crossing: int, count: int) -> None:
        super().__init__(
            f"Crossing {crossing} does not exist (diagram has {count})",
            {"crossing": crossing, "count": count},
        )
        self.crossing = crossing


# Catalog Errors
class CatalogError(FloerWidthError):
    """Error reading or writing a catalog."""

    pass


class EntryNotFoundError(CatalogError):
    """Catalog has no entry with the requested name."""

    def __init__(self, name: str) -> None:
        super().__init__(f"Catalog entry '{name}' not found", {"name": name})
        self.name = name


# Export Errors
class ExportError(FloerWidthError):
    """Rendering an export format failed."""

    def __init__(self, message: str, template_name: str | None = None) -> None:
        super().__init__(message, {"template": template_name} if template_name else None)
        self.template_name = template_name


# Computation Errors
class ComputationError(FloerWidthError):
    """Base error for failures during invariant computation."""

    pass


class StateLimitExceededError(ComputationError):
    """Kauffman state enumeration hit the configured cap."""

    def __init__(self, limit: int) -> None:
        super().__init__(
            f"Kauffman state enumeration exceeded {limit} states",
            {"max_states": limit},
        )
        self.limit = limit


class InvariantViolationError(ComputationError):
    """Two independent computations disagreed."""

    def __init__(
        self,
        check: str,
        message: str,
        reproduction: dict[str, Any] | None = None,
    ) -> None:
        details: dict[str, Any] = {"check": check}
        if reproduction:
            details["reproduction"] = reproduction
        super().__init__(message, details)
        self.check = check
        self.reproduction = reproduction or {}


class SkeinRecursionError(InvariantViolationError):
    """Skein evaluation recursed deeper than its bound."""

    def __init__(self, depth: int, bound: int, diagram: str) -> None:
        super().__init__(
            "skein-recursion",
            f"Skein recursion depth {depth} exceeded bound {bound}",
            {"pd": diagram, "depth": depth},
        )
