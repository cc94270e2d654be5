EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VIOLATION = 3


class SignedSpectraError(Exception):
    """Base error. Carries a human readable ``detail`` and the CLI exit code."""

    exit_code: int = EXIT_USAGE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# ── Input / graph construction ──────────────────────────────────────────


class ParseError(SignedSpectraError):
    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: {detail}")
        self.line = line


class DuplicateEdge(SignedSpectraError):
    pass


class SelfLoop(SignedSpectraError):
    pass


class ZeroWeight(SignedSpectraError):
    pass


class NonFiniteWeight(SignedSpectraError):
    pass


class MissingVertex(SignedSpectraError):
    pass


class NotAnEdge(SignedSpectraError):
    pass


class InvalidBipartition(SignedSpectraError):
    pass


class EmptyUnion(InvalidBipartition):
    pass


class EmptySet(SignedSpectraError):
    pass


class InvalidMeasure(SignedSpectraError):
    pass


class IndexOutOfRange(SignedSpectraError):
    pass


class EmptyEdgeSet(SignedSpectraError):
    pass


class BadEpsilon(SignedSpectraError):
    pass


class NotUnit(SignedSpectraError):
    pass


# ── Numerical failures ──────────────────────────────────────────────────


class NumericalError(SignedSpectraError):
    exit_code = EXIT_NUMERICAL


class IsolatedVertex(NumericalError):
    pass


class ConvergenceFailure(NumericalError):
    pass


class ZeroFunction(NumericalError):
    pass


class ZeroMap(ZeroFunction):
    pass


class TooLargeForExact(NumericalError):
    pass


class BudgetExceeded(NumericalError):
    pass


class PartitionFailure(NumericalError):
    def __init__(self, detail: str, best_attempt=None):
        super().__init__(detail)
        self.best_attempt = best_attempt


class DisjointnessViolation(NumericalError):
    pass


class InvariantViolation(NumericalError):
    pass


# ── Verification ────────────────────────────────────────────────────────


class VerificationFailed(SignedSpectraError):
    exit_code = EXIT_VIOLATION
