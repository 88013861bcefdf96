"""
Utility libraries for spexlab
"""
from .errors import (
    SpexLabError,
    InvalidGraphError,
    Graph6ParseError,
    HypothesisError,
    ScopeExceededError,
    SeriesDivergenceError,
    BracketError,
    ReportError,
)
from .logging import (
    configure_logging,
    get_logger,
    log_solve,
    log_verdict,
    log_search,
    log_error,
    LogContext,
)
from .metrics import (
    generate_metrics,
    init_service_info,
    record_verdict,
    record_candidate,
    record_error,
    SolveTimer,
)

__all__ = [
    # Errors
    "SpexLabError",
    "InvalidGraphError",
    "Graph6ParseError",
    "HypothesisError",
    "ScopeExceededError",
    "SeriesDivergenceError",
    "BracketError",
    "ReportError",
    # Logging
    "configure_logging",
    "get_logger",
    "log_solve",
    "log_verdict",
    "log_search",
    "log_error",
    "LogContext",
    # Metrics
    "generate_metrics",
    "init_service_info",
    "record_verdict",
    "record_candidate",
    "record_error",
    "SolveTimer",
]
