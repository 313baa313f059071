"""Structured Logging Configuration.

Logs always go to stderr; stdout carries only command results (JSON
documents or truth tables), so output can be piped into files while a
long search reports progress.

``LOG_FORMAT`` selects the renderer: ``json`` writes one JSON object per
line, ``console`` writes colored key/value lines, and ``auto`` picks
``console`` on a terminal and ``json`` otherwise.
"""

import logging
import sys
from typing import Final

import structlog
from structlog.typing import Processor

from src.infrastructure.config import settings

LOG_LEVELS: Final = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_level(level: str) -> int:
    """Map a level name to its numeric value.

    Raises:
        ValueError: If the name is not one of ``LOG_LEVELS``.
    """
    name = level.strip().upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"unknown log level {level!r}, expected one of {', '.join(LOG_LEVELS)}")
    return logging.getLevelNamesMapping()[name]


def _renderer(log_format: str) -> Processor:
    if log_format == "auto":
        log_format = "console" if sys.stderr.isatty() else "json"
    if log_format == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())


def configure_logging(level: str | None = None) -> None:
    """Configure structlog on top of stdlib logging, writing to stderr.

    Args:
        level: Overrides ``LOG_LEVEL`` when given.

    Raises:
        ValueError: If the level name is unknown.
    """
    log_level = resolve_level(level or settings.log.level)

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            _renderer(settings.log.format),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a logger named after its module."""
    return structlog.get_logger(name)
