"""Validation for catalog entries."""

from __future__ import annotations

from floerwidth.catalog.models import CatalogEntry
from floerwidth.core.exceptions import DiagramError, ValidationError
from floerwidth.tait.graphs import is_alternating


class CatalogValidator:
    """Validator for catalog entries."""

    def __init__(self, require_knots: bool = False) -> None:
        self._require_knots = require_knots

    def validate(self, entry: CatalogEntry) -> list[str]:
        """
        Validate one entry.

        Args:
            entry: The entry to validate.

        Returns:
            List of validation errors (empty if valid).
        """
        try:
            diagram = entry.diagram()
        except DiagramError as e:
            return [f"pd: {e.message}"]

        errors: list[str] = []
        if self._require_knots and not diagram.is_knot:
            errors.append(f"pd: expected a knot, found {diagram.component_count} components")
        if entry.alternating is not None and entry.alternating != is_alternating(diagram):
            errors.append(
                f"alternating: declared {entry.alternating} but the diagram "
                f"{'is' if not entry.alternating else 'is not'} alternating"
            )
        if (
            entry.known_width is not None
            and entry.known_genus is not None
            and entry.known_width != entry.known_genus + 1
        ):
            errors.append(
                f"known_width {entry.known_width} is not known_genus {entry.known_genus} + 1"
            )
        return errors

    def validate_or_raise(self, entry: CatalogEntry) -> None:
        """
        Validate and raise if errors found.

        Raises:
            ValidationError: If validation fails.
        """
        errors = self.validate(entry)
        if errors:
            raise ValidationError(
                f"Catalog entry validation failed with {len(errors)} error(s)",
                details={"errors": errors, "name": entry.name},
            )
