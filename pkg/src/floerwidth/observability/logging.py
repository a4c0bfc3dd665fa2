"""structlog setup: one event per line on stderr, diagrams rendered as PD text."""

from __future__ import annotations

import logging
import sys
from collections.abc import Iterator, MutableMapping
from contextlib import contextmanager
from typing import Any

import structlog
from structlog.types import Processor

from floerwidth.core.config import LogLevel, get_settings
from floerwidth.diagram.model import LinkDiagram


def _render_diagrams(
    _logger: Any, _method: str, event_dict: MutableMapping[str, Any]
) -> MutableMapping[str, Any]:
    for key, value in event_dict.items():
        if isinstance(value, LinkDiagram):
            event_dict[key] = str(value)
    return event_dict


def configure_logging(
    level: LogLevel | str | None = None,
    format_type: str | None = None,
    service_name: str | None = None,
) -> None:
    """
    Route structlog events to stderr so stdout carries only command output.

    Unset arguments fall back to the ``OBSERVABILITY_`` settings.
    """
    settings = get_settings().observability
    chosen = LogLevel((level or settings.log_level).upper())
    threshold = logging.getLevelName(chosen.value)

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        _render_diagrams,
    ]
    if (format_type or settings.log_format) == "json":
        processors += [structlog.processors.format_exc_info, structlog.processors.JSONRenderer()]
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(threshold),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(service=service_name or settings.service_name)


def get_logger(name: str | None = None, **initial_context: Any) -> Any:
    logger = structlog.get_logger(name)
    return logger.bind(**initial_context) if initial_context else logger


@contextmanager
def entry_context(name: str, **context: Any) -> Iterator[None]:
    """Tag every event logged inside the block with the catalog entry ``name``."""
    with structlog.contextvars.bound_contextvars(entry=name, **context):
        yield
