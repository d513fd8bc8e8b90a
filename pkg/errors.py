from typing import Any, Dict, Optional

from config import (
    EXIT_CAP_EXCEEDED,
    EXIT_INVARIANT_VIOLATION,
    EXIT_PARSE_ERROR,
    EXIT_UNEXPECTED,
    EXIT_VERIFICATION_FAILURE,
)


class CtiltError(Exception):
    """Base error; carries the process exit code and a JSON-ready detail payload."""

    exit_code = EXIT_UNEXPECTED

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = {"success": False, "message": message}
        if detail:
            self.detail.update(detail)


class QuiverParseError(CtiltError):
    exit_code = EXIT_PARSE_ERROR


class UnsupportedInput(CtiltError):
    exit_code = EXIT_PARSE_ERROR


class InvariantViolation(CtiltError):
    exit_code = EXIT_INVARIANT_VIOLATION


class VerificationFailure(CtiltError):
    exit_code = EXIT_VERIFICATION_FAILURE


class CapExceeded(CtiltError):
    exit_code = EXIT_CAP_EXCEEDED
