"""Configuration management using Pydantic settings."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    """Log level options."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class ObservabilitySettings(BaseSettings):
    """Logging settings."""

    model_config = SettingsConfigDict(env_prefix="OBSERVABILITY_")

    log_level: LogLevel = Field(default=LogLevel.WARNING)
    log_format: Literal["json", "console"] = Field(default="console")
    service_name: str = Field(default="floerwidth")


class StatesSettings(BaseSettings):
    """Kauffman state enumeration settings."""

    model_config = SettingsConfigDict(env_prefix="STATES_")

    max_states: int = Field(
        default=10_000_000,
        ge=1,
        description="Hard cap on the number of enumerated Kauffman states",
    )
    grading_table: Path | None = Field(
        default=None,
        description="YAML file overriding the bundled local grading contributions",
    )


class CacheSettings(BaseSettings):
    """Result cache settings."""

    model_config = SettingsConfigDict(env_prefix="FLOERWIDTH_CACHE_")

    dir: Path = Field(
        default=Path("~/.cache/floerwidth"),
        description="Directory holding the ingested catalog and the results log",
    )
    results_file: str = Field(default="results.jsonl")
    catalog_file: str = Field(default="catalog.json")

    @field_validator("dir", mode="after")
    @classmethod
    def expand_dir(cls, v: Path) -> Path:
        """Expand a leading ~ in the cache directory."""
        return v.expanduser()


class VerifySettings(BaseSettings):
    """Batch verification settings."""

    model_config = SettingsConfigDict(env_prefix="VERIFY_")

    workers: int = Field(
        default=1,
        ge=1,
        description="Process pool size for catalog verification (1 runs inline)",
    )
    marked_edge_max_crossings: int = Field(default=8, ge=0)
    crossing_change_max_crossings: int = Field(default=9, ge=0)


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="FLOERWIDTH_",
        env_nested_delimiter="__",
        case_sensitive=False,
    )

    # Environment
    environment: Literal["development", "test", "production"] = Field(default="development")
    debug: bool = Field(default=False)

    # Component settings
    observability: ObservabilitySettings = Field(default_factory=ObservabilitySettings)
    states: StatesSettings = Field(default_factory=StatesSettings)
    cache: CacheSettings = Field(default_factory=CacheSettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)

    @classmethod
    def load(cls) -> Settings:
        """Load settings from environment."""
        return cls()


# Global settings instance (lazy loaded)
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings.load()
    return _settings


def configure_settings(settings: Settings | None) -> None:
    """Configure the global settings instance (for testing)."""
    global _settings
    _settings = settings
