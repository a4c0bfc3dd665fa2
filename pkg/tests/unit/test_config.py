"""Unit tests for settings and structured logging."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from floerwidth.core.config import (
    LogLevel,
    Settings,
    StatesSettings,
    VerifySettings,
    configure_settings,
    get_settings,
)
from floerwidth.observability.logging import configure_logging, entry_context, get_logger


class TestSettings:
    """Tests for environment-driven settings."""

    def test_test_environment(self):
        """Test the suite runs with the test environment."""
        assert get_settings().environment == "test"

    def test_defaults(self, monkeypatch):
        """Test values with no overrides."""
        monkeypatch.delenv("VERIFY_WORKERS", raising=False)
        monkeypatch.delenv("OBSERVABILITY_LOG_LEVEL", raising=False)
        settings = Settings()
        assert settings.states.max_states == 10_000_000
        assert settings.states.grading_table is None
        assert settings.verify.workers == 1
        assert settings.observability.log_level is LogLevel.WARNING
        assert settings.cache.results_file == "results.jsonl"

    def test_component_prefixes(self, monkeypatch):
        """Test each component reads its own prefix."""
        monkeypatch.setenv("STATES_MAX_STATES", "5")
        monkeypatch.setenv("VERIFY_WORKERS", "3")
        monkeypatch.setenv("OBSERVABILITY_LOG_FORMAT", "json")
        settings = Settings()
        assert settings.states.max_states == 5
        assert settings.verify.workers == 3
        assert settings.observability.log_format == "json"

    def test_cache_dir_is_expanded(self, monkeypatch):
        """Test a leading ~ in the cache directory."""
        monkeypatch.setenv("FLOERWIDTH_CACHE_DIR", "~/knots")
        assert Settings().cache.dir == Path("~/knots").expanduser()

    def test_invalid_values(self, monkeypatch):
        """Test out-of-range settings are rejected."""
        with pytest.raises(ValidationError):
            StatesSettings(max_states=0)
        monkeypatch.setenv("VERIFY_WORKERS", "0")
        with pytest.raises(ValidationError):
            VerifySettings()

    def test_configure_settings(self, reset_settings):
        """Test installing and dropping a settings instance."""
        custom = Settings(debug=True)
        configure_settings(custom)
        assert get_settings() is custom
        configure_settings(None)
        assert get_settings() is not custom


class TestLogging:
    """Tests for structlog configuration."""

    def _lines(self, capsys) -> list[dict]:
        err = capsys.readouterr().err
        return [json.loads(line) for line in err.splitlines() if line.startswith("{")]

    def test_json_lines_on_stderr(self, capsys):
        """Test JSON output with the service bound."""
        configure_logging(level="info", format_type="json", service_name="knots")
        try:
            get_logger("test").info("computed", pd="U")
        finally:
            configure_logging(level="CRITICAL")
        captured = self._lines(capsys)
        assert captured[-1]["event"] == "computed"
        assert captured[-1]["pd"] == "U"
        assert captured[-1]["service"] == "knots"
        assert captured[-1]["level"] == "info"

    def test_level_filter(self, capsys):
        """Test records below the level are dropped."""
        configure_logging(level=LogLevel.WARNING, format_type="json")
        try:
            get_logger("test").info("hidden")
            get_logger("test").warning("shown")
        finally:
            configure_logging(level="CRITICAL")
        assert [line["event"] for line in self._lines(capsys)] == ["shown"]

    def test_log_context(self, capsys):
        """Test temporary context is bound and then removed."""
        configure_logging(level="INFO", format_type="json")
        try:
            logger = get_logger("test", run=7)
            with entry_context("3_1"):
                logger.info("inside")
            logger.info("outside")
        finally:
            configure_logging(level="CRITICAL")
        inside, outside = self._lines(capsys)[-2:]
        assert inside["entry"] == "3_1"
        assert "entry" not in outside
        assert outside["run"] == 7

    def test_diagrams_are_logged_as_pd_text(self, capsys, trefoil):
        """Test a diagram value is written as its PD code."""
        configure_logging(level="DEBUG", format_type="json")
        try:
            get_logger("test").debug("resolved", diagram=trefoil, crossing=0)
        finally:
            configure_logging(level="CRITICAL")
        line = self._lines(capsys)[-1]
        assert line["diagram"] == str(trefoil)
        assert line["diagram"].startswith("PD[")
        assert line["crossing"] == 0
