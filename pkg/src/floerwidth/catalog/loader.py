"""CSV/JSON loader for knot catalogs."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from floerwidth.catalog.models import Catalog, CatalogEntry, RowError
from floerwidth.catalog.validator import CatalogValidator
from floerwidth.core.exceptions import CatalogError, ValidationError
from floerwidth.observability.logging import get_logger

logger = get_logger(__name__)

COLUMNS = ("name", "pd", "alternating", "known_width", "known_genus", "source")


class IngestResult(BaseModel):
    """Entries that validated and the rows that did not."""

    catalog: Catalog
    rejected: list[RowError] = Field(default_factory=list)


class CatalogLoader:
    """Loader for catalogs from files; bad rows are reported and skipped."""

    def __init__(self, validator: CatalogValidator | None = None) -> None:
        self._validator = validator or CatalogValidator()

    def load_file(self, path: str | Path) -> IngestResult:
        """
        Load a catalog from a CSV or JSON file.

        Raises:
            CatalogError: If the file cannot be read or is not a table of rows.
        """
        file_path = Path(path)
        if not file_path.exists():
            raise CatalogError(f"Catalog file not found: {path}")
        try:
            content = file_path.read_text(encoding="utf-8")
        except OSError as e:
            raise CatalogError(f"Failed to read catalog file: {e}") from e
        return self.load_string(content, file_path.suffix)

    def load_bundled(self) -> IngestResult:
        """The catalog shipped with the package."""
        content = (
            resources.files("floerwidth.catalog")
            .joinpath("data/knots.csv")
            .read_text(encoding="utf-8")
        )
        return self.load_string(content, ".csv")

    def load_string(self, content: str, format_hint: str = ".csv") -> IngestResult:
        """
        Load a catalog from text.

        Args:
            content: CSV with a header row, or a JSON array of objects.
            format_hint: File extension hint (".csv", ".json").
        """
        if format_hint.lower() == ".json":
            try:
                data = json.loads(content)
            except json.JSONDecodeError as e:
                raise CatalogError(f"Failed to parse catalog JSON: {e}") from e
            if isinstance(data, dict) and "entries" in data:
                data = data["entries"]
            if not isinstance(data, list):
                raise CatalogError("Catalog JSON must be an array of entries")
            rows = data
        else:
            lines = [line for line in content.splitlines() if not line.lstrip().startswith("#")]
            reader = csv.DictReader(io.StringIO("\n".join(lines)), skipinitialspace=True)
            if reader.fieldnames is None or not {"name", "pd"} <= set(reader.fieldnames):
                raise CatalogError("Catalog CSV needs a header with at least name and pd")
            rows = list(reader)
        return self.load_rows(rows)

    def load_rows(self, rows: list[Any]) -> IngestResult:
        entries: list[CatalogEntry] = []
        rejected: list[RowError] = []
        seen: set[str] = set()
        for number, row in enumerate(rows, start=1):
            name = row.get("name") if isinstance(row, dict) else None
            try:
                if not isinstance(row, dict):
                    raise ValidationError("row must be an object")
                entry = CatalogEntry.model_validate(
                    {key: row[key] for key in COLUMNS if key in row}
                )
                if entry.name in seen:
                    raise ValidationError(f"duplicate name {entry.name!r}")
                self._validator.validate_or_raise(entry)
            except PydanticValidationError as e:
                rejected.append(RowError(row=number, name=name, reason=str(e)))
                continue
            except ValidationError as e:
                reason = "; ".join(e.details.get("errors", [])) or e.message
                rejected.append(RowError(row=number, name=name, reason=reason))
                continue
            seen.add(entry.name)
            entries.append(entry)

        for error in rejected:
            logger.warning(
                "Rejected catalog row", row=error.row, name=error.name, reason=error.reason
            )
        logger.info("Loaded catalog", entries=len(entries), rejected=len(rejected))
        return IngestResult(catalog=Catalog(entries=tuple(entries)), rejected=rejected)

    def dump_json(self, catalog: Catalog, pretty: bool = True) -> str:
        """Canonical JSON: entries in catalog order, keys sorted, canonical PD text."""
        data = []
        for entry in catalog.entries:
            item = entry.model_dump(mode="json", exclude_none=True)
            item["pd"] = str(entry.diagram())
            data.append(item)
        if pretty:
            return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        return json.dumps(data, sort_keys=True, ensure_ascii=False)

    def save_file(self, catalog: Catalog, path: str | Path) -> None:
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(self.dump_json(catalog), encoding="utf-8")
