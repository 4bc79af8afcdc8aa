"""
Structured logging configuration
"""
import logging
import sys
from typing import IO, Optional

import structlog
from pythonjsonlogger import jsonlogger

from bqalg.config import settings


def setup_logging(stream: Optional[IO[str]] = None, level: Optional[str] = None):
    """Setup structured logging with JSON format.

    Logs go to stderr: stdout carries the CLI's JSON lines.
    """
    level_name = (level or settings.log_level).upper()

    # Clear any existing handlers
    root_logger = logging.getLogger()
    root_logger.handlers.clear()

    # Configure standard library logging
    logging.basicConfig(
        format="%(message)s",
        stream=stream or sys.stderr,
        level=getattr(logging, level_name),
    )

    # Configure structlog
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="ISO"),
            structlog.dev.set_exc_info if settings.debug else lambda _, __, evt_dict: evt_dict,
            structlog.processors.JSONRenderer() if not settings.debug else structlog.dev.ConsoleRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )

    # JSON formatter for non-structlog loggers (uvicorn, asyncio, ...)
    if not settings.debug:
        json_formatter = jsonlogger.JsonFormatter(
            fmt="%(asctime)s %(name)s %(levelname)s %(message)s",
            datefmt="%Y-%m-%dT%H:%M:%S",
        )
        for handler in root_logger.handlers:
            handler.setFormatter(json_formatter)

    logger = structlog.get_logger(__name__)
    logger.debug("logging_configured", debug_mode=settings.debug, log_level=level_name)
