"""Shared exception types and machine-readable error codes."""

from __future__ import annotations

from typing import Any

DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
NEGATIVE_ENTRY = "NEGATIVE_ENTRY"
STEP_NOT_APPLICABLE = "STEP_NOT_APPLICABLE"
CERTIFICATE_MISMATCH = "CERTIFICATE_MISMATCH"
INVALID_PAIR = "INVALID_PAIR"
BAD_REFERENCE = "BAD_REFERENCE"
ROW_ZERO = "ROW_ZERO"
NONCOMMUTING_MATRICES = "NONCOMMUTING_MATRICES"
NONCOMPOSABLE_WORD = "NONCOMPOSABLE_WORD"
OVERLAPPING_CYLINDERS = "OVERLAPPING_CYLINDERS"
NOT_A_PERMUTATION = "NOT_A_PERMUTATION"
GROUP_TOO_LARGE = "GROUP_TOO_LARGE"
ZERO_TARGET = "ZERO_TARGET"
SCHEMA_VIOLATION = "SCHEMA_VIOLATION"
UNSUPPORTED_MODEL = "UNSUPPORTED_MODEL"


class InputError(ValueError):
    """Rejected input.

    `code` is one of the module-level constants; `details` holds a small
    JSON-serializable payload for diagnostics.
    """

    def __init__(self, code: str, message: str, **details: Any):
        super().__init__(message)
        self.code = code
        self.details = details


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two independent computations that must agree do not; this
    always indicates a bug in the library, never a property of the input.
    """
