"""Knot catalogs, their ingestion and the result cache."""

from floerwidth.catalog.cache import ResultCache
from floerwidth.catalog.loader import CatalogLoader, IngestResult
from floerwidth.catalog.models import Catalog, CatalogEntry, ResultRecord, RowError
from floerwidth.catalog.records import compute_record
from floerwidth.catalog.validator import CatalogValidator

__all__ = [
    "Catalog",
    "CatalogEntry",
    "CatalogLoader",
    "CatalogValidator",
    "IngestResult",
    "ResultCache",
    "ResultRecord",
    "RowError",
    "compute_record",
]
