from pydantic import BaseModel, ConfigDict

from signed_spectra.core.errors import (
    EXIT_NUMERICAL,
    EXIT_USAGE,
    EXIT_VIOLATION,
    SignedSpectraError,
)


class ErrorResponse(BaseModel):
    detail: str
    error: str
    exit_code: int

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"detail": "line 3: expected 3 fields", "error": "ParseError", "exit_code": 1},
        }
    )


# ── Exit code table ─────────────────────────────────────────────────────


def _exit(code: int, description: str, example_error: str) -> dict:
    """Build a single entry of the exit code table."""
    return {code: {"description": description, "example": example_error}}


SUCCESS_0 = _exit(0, "Success – results written to stdout or --out.", "")

USAGE_1 = _exit(
    EXIT_USAGE,
    "Usage / parse error – bad flags, malformed graph file, invalid input sets.",
    "ParseError",
)

NUMERICAL_2 = _exit(
    EXIT_NUMERICAL,
    "Numerical failure – isolated vertex, non-convergence, exhausted budget or retries.",
    "BudgetExceeded",
)

VIOLATION_3 = _exit(
    EXIT_VIOLATION,
    "Verification violation – at least one inequality report has slack below tolerance.",
    "VerificationFailed",
)


def build_exit_codes(*dicts: dict) -> dict:
    """Merge single-key exit code dicts into one table."""
    merged: dict = {}
    for d in dicts:
        merged.update(d)
    return merged


EXIT_CODES = build_exit_codes(SUCCESS_0, USAGE_1, NUMERICAL_2, VIOLATION_3)


def error_response(exc: SignedSpectraError) -> ErrorResponse:
    return ErrorResponse(detail=exc.detail, error=type(exc).__name__, exit_code=exc.exit_code)
