"""
Error types and the command-line error handler.
Provides structured error reports and logging.
"""
import json
import logging
import sys
from typing import Any, Dict, Optional, TextIO

# Create logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_OUTPUT = 3


class InfofidError(Exception):
    """Base exception for infofid errors."""

    exit_code = EXIT_FAILURE

    def __init__(self, message: str, payload: Optional[Dict[str, Any]] = None):
        """
        Initialize an infofid error.

        Args:
            message: Error message (user-friendly)
            payload: Additional error data
        """
        super().__init__(message)
        self.message = message
        self.payload = payload or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary for the JSON error report."""
        error_dict = dict(self.payload)
        error_dict['error'] = self.message
        error_dict['exit_code'] = self.exit_code
        error_dict['suggestion'] = self._get_suggestion()
        return error_dict

    def _get_suggestion(self) -> str:
        """Get helpful suggestion based on error message."""
        msg_lower = self.message.lower()

        if 'rank' in msg_lower:
            return "Rank must satisfy 1 <= r <= d."
        elif 'kappa' in msg_lower:
            return "kappa_sq must lie in (0, 1]; the default is 1."
        elif 'dimension' in msg_lower or 'dim' in msg_lower:
            return "Dimensions must be positive integers and agree between operands."
        elif 'seed' in msg_lower:
            return "Seeds are unsigned 64-bit integers (0 <= seed < 2**64)."
        return "Run with --help to see the accepted arguments."


class InvalidArgumentError(InfofidError, ValueError):
    """Raised when an argument violates an operation's precondition."""

    exit_code = EXIT_USAGE


class OutcomeImpossibleError(InfofidError):
    """Raised when the state is orthogonal to the projector support."""

    def _get_suggestion(self) -> str:
        return "The outcome has zero probability for this state; no post-measurement state exists."


class UndefinedEfficiencyError(InfofidError, ArithmeticError):
    """Raised for the efficiency at r = d, where I(m) = 1 - F(m) = 0."""

    def _get_suggestion(self) -> str:
        return "Efficiency is only defined for rank r < d."


class UnsupportedDimensionError(InvalidArgumentError):
    """Raised when numeric quadrature is requested above the supported dimension."""

    def _get_suggestion(self) -> str:
        return "Use the Monte Carlo estimator for larger dimensions."


class OutputError(InfofidError, OSError):
    """Raised when output cannot be written."""

    exit_code = EXIT_OUTPUT

    def _get_suggestion(self) -> str:
        return "Check that the output path is writable."


class VerificationFailedError(InfofidError):
    """Raised when a verification row exceeds the z-score threshold."""

    def _get_suggestion(self) -> str:
        return "Inspect the flagged rows; rerun with more samples or another seed to rule out chance."


def handle_cli_error(error: Exception, stream: Optional[TextIO] = None) -> int:
    """
    Report an error on stderr and map it to an exit status.

    Args:
        error: The exception raised by a command
        stream: Where to write the JSON error report (defaults to stderr)

    Returns:
        Process exit status
    """
    stream = stream or sys.stderr

    if isinstance(error, InfofidError):
        logger.error(f"{type(error).__name__}: {error.message} (exit {error.exit_code})")
        report = error.to_dict()
        exit_code = error.exit_code
    else:
        logger.exception(f"Unhandled exception: {str(error)}")
        report = {
            'error': 'An unexpected error occurred.',
            'exit_code': EXIT_FAILURE,
            'details': str(error),
            'suggestion': 'Rerun with --log-level DEBUG for details.'
        }
        exit_code = EXIT_FAILURE

    stream.write(json.dumps(report) + '\n')
    return exit_code
