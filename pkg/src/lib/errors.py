"""
Exception hierarchy for spexlab

Library code raises these; the CLI maps them to exit codes.
"""
from typing import Optional


class SpexLabError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code = 1


class InvalidGraphError(SpexLabError, ValueError):
    """Bad vertex ids, self-loops, asymmetric input or an inconsistent edit list"""

    exit_code = 2


class Graph6ParseError(SpexLabError, ValueError):
    """Malformed graph6 record; `offset` is the byte position of the fault"""

    exit_code = 2

    def __init__(self, message: str, offset: int, record: Optional[bytes] = None):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
        self.record = record


class HypothesisError(SpexLabError, ValueError):
    """Parameters violate the stated hypothesis of a lemma or operation"""

    exit_code = 2

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ScopeExceededError(SpexLabError, ValueError):
    """Exhaustive oracle or enumeration asked beyond its cap"""

    exit_code = 2


class SeriesDivergenceError(SpexLabError, ArithmeticError):
    """A walk series could not be certified convergent at the requested point"""


class BracketError(SpexLabError, ArithmeticError):
    """Bisection bracket could not be established for the series equation"""


class ReportError(SpexLabError):
    """Report emission failed (empty results or unwritable path)"""
