"""Pydantic models for knot catalogs and computed result records."""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from floerwidth.core.exceptions import EntryNotFoundError
from floerwidth.diagram.model import LinkDiagram
from floerwidth.diagram.parser import parse_pd


class CatalogEntry(BaseModel):
    """One named diagram with its declared expectations."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Table name, e.g. 8_19")
    pd: str = Field(..., description="Diagram notation accepted by parse_pd")
    alternating: bool | None = Field(
        default=None,
        description="Declared alternating flag, checked against the Tait graphs",
    )
    known_width: int | None = Field(default=None, ge=1)
    known_genus: int | None = Field(default=None, ge=0)
    source: str | None = Field(default=None, description="Where the diagram comes from")

    @field_validator("name")
    @classmethod
    def strip_name(cls, v: str) -> str:
        v = v.strip()
        if not v:
            raise ValueError("name must not be empty")
        return v

    @field_validator("alternating", mode="before")
    @classmethod
    def parse_flag(cls, v: Any) -> Any:
        """Accept CSV spellings of booleans; blank means undeclared."""
        if isinstance(v, str):
            text = v.strip().lower()
            if text == "":
                return None
            if text in ("true", "yes", "1", "y"):
                return True
            if text in ("false", "no", "0", "n"):
                return False
        return v

    @field_validator("known_width", "known_genus", "source", mode="before")
    @classmethod
    def blank_to_none(cls, v: Any) -> Any:
        if isinstance(v, str) and v.strip() == "":
            return None
        return v

    def diagram(self) -> LinkDiagram:
        return parse_pd(self.pd)


class Catalog(BaseModel):
    """A validated set of uniquely named entries."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[CatalogEntry, ...] = Field(default=())

    @model_validator(mode="after")
    def check_unique_names(self) -> Catalog:
        seen: set[str] = set()
        for entry in self.entries:
            if entry.name in seen:
                raise ValueError(f"duplicate catalog name {entry.name!r}")
            seen.add(entry.name)
        return self

    @property
    def names(self) -> list[str]:
        return [entry.name for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, name: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise EntryNotFoundError(name)

    def find(self, name: str) -> CatalogEntry | None:
        for entry in self.entries:
            if entry.name == name:
                return entry
        return None

    def filter(self, max_crossings: int | None = None) -> list[CatalogEntry]:
        """Entries whose diagram has at most ``max_crossings`` crossings."""
        if max_crossings is None:
            return list(self.entries)
        return [e for e in self.entries if e.diagram().crossing_count <= max_crossings]


class RowError(BaseModel):
    """A catalog row that failed to ingest."""

    row: int = Field(..., description="1-based data row number")
    name: str | None = None
    reason: str


class ResultRecord(BaseModel):
    """Invariants computed for one diagram, keyed by canonical form."""

    canonical: str = Field(..., description="Canonical PD text")
    name: str | None = Field(default=None, description="Catalog name, when known")
    vertices: int = Field(..., alias="V")
    edges: int = Field(..., alias="E")
    faces: int = Field(..., alias="F")
    chi: int
    genus: list[int] = Field(..., description="Turaev genus per split part")
    width: int = Field(..., description="Width (normalized width for links)")
    state_count: int | None = Field(default=None, description="Kauffman states, knots only")
    diagonal_max: int | float | None = Field(default=None, alias="Delta")
    diagonal_min: int | float | None = Field(default=None, alias="delta")
    version: str
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    model_config = ConfigDict(populate_by_name=True)

    def invariant_fields(self) -> dict[str, Any]:
        """Everything a rerun must reproduce exactly."""
        return self.model_dump(by_alias=True, exclude={"timestamp", "version", "name"})

    def to_json_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)
