"""
Domain errors. Every failure the services can report carries a machine code
so the command line can emit structured error JSON.
"""

from core.schemas.enums import ErrorCode


class TaucertError(ValueError):
    code: ErrorCode = ErrorCode.INVALID_INPUT

    def __init__(self, message: str, *, code: ErrorCode | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self) -> str:
        return str(self.args[0]) if self.args else ""


class DivisionByZeroError(TaucertError, ZeroDivisionError):
    code = ErrorCode.DIVISION_BY_ZERO


class NonSplitDenominatorError(TaucertError):
    code = ErrorCode.NON_SPLIT_DENOMINATOR


class ResonanceError(TaucertError):
    code = ErrorCode.RESONANCE

    def __init__(self, message: str, *, order: int):
        super().__init__(message)
        self.order = order


class SingularParameterError(TaucertError):
    code = ErrorCode.SINGULAR_PARAMETER


class MissingInitialTermsError(TaucertError):
    code = ErrorCode.MISSING_INITIAL_TERMS


class UnknownEntryError(TaucertError):
    code = ErrorCode.UNKNOWN_ENTRY


class TruncationMismatchError(TaucertError):
    code = ErrorCode.TRUNCATION_MISMATCH


class PreconditionError(TaucertError):
    code = ErrorCode.PRECONDITION


class DimensionMismatchError(TaucertError):
    code = ErrorCode.DIMENSION_MISMATCH


class ComparisonOrderError(TaucertError):
    code = ErrorCode.COMPARISON_ORDER


class InconsistentEquationError(TaucertError):
    code = ErrorCode.INCONSISTENT
