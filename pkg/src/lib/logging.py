"""
Structured Logging Configuration using structlog
JSON or console logs on stderr, so reports written to stdout stay clean

Licensed under MIT License
"""
import logging
import os
import sys
from typing import Any, Dict, Optional

import structlog
from structlog.types import Processor

from src import __version__


def add_environment_info(
    logger: logging.Logger, method_name: str, event_dict: Dict[str, Any]
) -> Dict[str, Any]:
    """Add environment information to log entries"""
    event_dict["environment"] = os.getenv("SPEXLAB_ENVIRONMENT", "development")
    event_dict["service"] = "spexlab"
    return event_dict


def add_version_info(
    logger: logging.Logger, method_name: str, event_dict: Dict[str, Any]
) -> Dict[str, Any]:
    """Add version information to log entries"""
    event_dict["version"] = __version__
    return event_dict


def round_floats(
    logger: logging.Logger, method_name: str, event_dict: Dict[str, Any]
) -> Dict[str, Any]:
    """Print floats with 12 significant digits, matching the report format"""
    for key, value in event_dict.items():
        if isinstance(value, float):
            event_dict[key] = float(f"{value:.12g}")
    return event_dict


def configure_logging(
    log_level: str = "INFO",
    json_format: bool = False,
    include_timestamp: bool = True,
):
    """
    Configure structured logging for the application.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        json_format: If True, output JSON; if False, output colored console format
        include_timestamp: Include timestamps in logs
    """
    processors: list[Processor] = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        add_environment_info,
        add_version_info,
        round_floats,
    ]

    if include_timestamp:
        processors.insert(0, structlog.processors.TimeStamper(fmt="iso"))

    if json_format:
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))

    level = getattr(logging, log_level.upper(), logging.INFO)
    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )

    # Also configure standard library logging
    logging.basicConfig(
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        level=level,
    )

    return structlog.get_logger()


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    """
    Get a structured logger instance.

    Args:
        name: Optional logger name (usually __name__)

    Returns:
        Configured structlog logger
    """
    logger = structlog.get_logger()
    if name:
        logger = logger.bind(logger_name=name)
    return logger


class LogContext:
    """Context manager for adding temporary context to logs"""

    def __init__(self, **context):
        self.context = context
        self.logger = None

    def __enter__(self):
        self.logger = structlog.get_logger()
        return self.logger.bind(**self.context)

    def __exit__(self, exc_type, exc_val, exc_tb):
        pass


# Convenience functions for common log patterns

def log_solve(
    n: int,
    rho: float,
    residual: float,
    iterations: int,
    method: str,
    latency_ms: float,
    **kwargs
):
    """Log a finished eigensolve"""
    logger = get_logger("spectral")
    logger.debug(
        "eigensolve_complete",
        n=n,
        rho=rho,
        residual=residual,
        iterations=iterations,
        method=method,
        latency_ms=round(latency_ms, 2),
        **kwargs
    )


def log_verdict(
    lemma: str,
    verdict: str,
    params: Dict[str, Any],
    margin: Optional[float] = None,
    **kwargs
):
    """Log a lemma verdict; FAIL and INCONCLUSIVE are raised to warning"""
    logger = get_logger("lab")
    emit = logger.info if verdict == "PASS" else logger.warning
    emit(
        "lemma_verdict",
        lemma=lemma,
        verdict=verdict,
        params=params,
        margin=margin,
        **kwargs
    )


def log_search(
    family: str,
    n: int,
    ell: int,
    examined: int,
    accepted: int,
    latency_ms: float,
    **kwargs
):
    """Log a finished extremal search"""
    logger = get_logger("spex")
    logger.info(
        "search_complete",
        family=family,
        n=n,
        ell=ell,
        examined=examined,
        accepted=accepted,
        latency_ms=round(latency_ms, 2),
        **kwargs
    )


def log_error(
    error: Exception,
    component: str,
    context: Optional[Dict[str, Any]] = None,
    exc_info: bool = True,
):
    """Log an error with context"""
    logger = get_logger(component)
    logger.error(
        "error_occurred",
        error_type=type(error).__name__,
        error_message=str(error),
        component=component,
        **(context or {}),
        exc_info=exc_info,
    )
