"""
spexlab - Main Entry Point
Spectral radius toolkit for C_ell-free planar graphs

Usage:
    python main.py rho --name S4
    python main.py verify --lemma wdiff --n1-max 12
    python main.py manifest
"""
import sys

from src.cli import main as cli_main
from src.lib.logging import get_logger

logger = get_logger(__name__)


def setup_global_error_handlers():
    """Log uncaught exceptions before the interpreter reports them"""

    def handle_uncaught_exception(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return
        logger.error("uncaught_exception", error_type=exc_type.__name__, error_message=str(exc_value),
                     exc_info=(exc_type, exc_value, exc_traceback))

    sys.excepthook = handle_uncaught_exception


def main() -> int:
    """Main entry point"""
    setup_global_error_handlers()
    try:
        return cli_main()
    except KeyboardInterrupt:
        logger.info("interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
