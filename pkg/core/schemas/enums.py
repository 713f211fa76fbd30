from enum import Enum

class Verdict(str, Enum):
    RATIONAL = "rational"
    STRONGLY_D_TRANSCENDENTAL = "strongly-d-transcendental"
    UNSUPPORTED = "unsupported"

class EvidenceKind(str, Enum):
    NO_RATIONAL_SOLUTION = "no-rational-solution"
    SERIES_MISMATCH = "rational-solutions-exist-but-series-differs"
    WITNESS_MATCH = "witness-match"
    UNSUPPORTED_INPUT = "unsupported-input"

class ResidualStatus(str, Enum):
    EXACT = "exact"
    MISMATCH = "mismatch"

class ErrorCode(str, Enum):
    DIVISION_BY_ZERO = "division-by-zero"
    NON_SPLIT_DENOMINATOR = "non-split-denominator"
    RESONANCE = "resonance"
    SINGULAR_PARAMETER = "singular-parameter"
    MISSING_INITIAL_TERMS = "missing-initial-terms"
    UNKNOWN_ENTRY = "unknown-entry"
    TRUNCATION_MISMATCH = "truncation-mismatch"
    PRECONDITION = "precondition"
    DIMENSION_MISMATCH = "dimension-mismatch"
    INVALID_INPUT = "invalid-input"
    COMPARISON_ORDER = "comparison-order"
    INCONSISTENT = "inconsistent"
