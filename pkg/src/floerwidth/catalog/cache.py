"""On-disk result cache: an ingested catalog plus an append-only JSON-lines log."""

from __future__ import annotations

import fcntl
import json
from collections.abc import Iterator
from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from floerwidth.catalog.loader import CatalogLoader
from floerwidth.catalog.models import Catalog, ResultRecord
from floerwidth.core.config import CacheSettings, get_settings
from floerwidth.core.exceptions import CatalogError
from floerwidth.observability.logging import get_logger

logger = get_logger(__name__)


class ResultCache:
    """
    Result records keyed by canonical form.

    The log is only ever appended to, under an exclusive lock, and a record
    is written at most once per canonical form. Readers see the first record
    written for a form.
    """

    def __init__(
        self,
        directory: str | Path | None = None,
        settings: CacheSettings | None = None,
    ) -> None:
        self._settings = settings or get_settings().cache
        self._dir = Path(directory).expanduser() if directory else self._settings.dir

        # Stats
        self._hits = 0
        self._misses = 0

    @property
    def directory(self) -> Path:
        return self._dir

    @property
    def results_path(self) -> Path:
        return self._dir / self._settings.results_file

    @property
    def catalog_path(self) -> Path:
        return self._dir / self._settings.catalog_file

    def records(self) -> Iterator[ResultRecord]:
        """All records in the log, in write order; corrupt lines are skipped."""
        if not self.results_path.exists():
            return
        with self.results_path.open(encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    yield ResultRecord.model_validate_json(line)
                except PydanticValidationError as e:
                    logger.warning("Skipping corrupt cache line", line=number, error=str(e))

    def canonical_forms(self) -> set[str]:
        return {record.canonical for record in self.records()}

    def get(self, canonical: str) -> ResultRecord | None:
        """The cached record for a canonical form, if any."""
        for record in self.records():
            if record.canonical == canonical:
                self._hits += 1
                logger.debug("Cache hit", pd=canonical)
                return record
        self._misses += 1
        return None

    def append(self, record: ResultRecord) -> bool:
        """
        Write ``record`` unless its canonical form is already in the log.

        Returns:
            True if a line was written.
        """
        self._dir.mkdir(parents=True, exist_ok=True)
        line = json.dumps(record.to_json_dict(), sort_keys=True, ensure_ascii=False)
        with self.results_path.open("a+", encoding="utf-8") as f:
            fcntl.flock(f.fileno(), fcntl.LOCK_EX)
            try:
                f.seek(0)
                for existing in f:
                    if not existing.strip():
                        continue
                    try:
                        if json.loads(existing).get("canonical") == record.canonical:
                            return False
                    except json.JSONDecodeError:
                        continue
                f.seek(0, 2)
                f.write(line + "\n")
                f.flush()
            finally:
                fcntl.flock(f.fileno(), fcntl.LOCK_UN)
        logger.debug("Cached record", pd=record.canonical)
        return True

    def save_catalog(self, catalog: Catalog, loader: CatalogLoader | None = None) -> Path:
        """Persist ``catalog`` as canonical JSON and return the file written."""
        (loader or CatalogLoader()).save_file(catalog, self.catalog_path)
        logger.info("Saved catalog", path=str(self.catalog_path), entries=len(catalog))
        return self.catalog_path

    def load_catalog(self, loader: CatalogLoader | None = None) -> Catalog:
        """
        The last ingested catalog.

        Raises:
            CatalogError: Nothing has been ingested into this directory.
        """
        if not self.catalog_path.exists():
            raise CatalogError(f"No ingested catalog in {self._dir}")
        return (loader or CatalogLoader()).load_file(self.catalog_path).catalog

    def get_stats(self) -> dict[str, int]:
        return {"hits": self._hits, "misses": self._misses}
