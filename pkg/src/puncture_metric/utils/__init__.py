from .error_handler import (
    handle_command_error,
    is_error_response,
    wrap_command_with_error_handling,
)
from .exceptions import (
    PunctureMetricError,
    InvalidBellIndex,
    SeriesPreconditionViolated,
    NonInvertibleLeadingCoefficient,
    UnsupportedLevel,
    NonIntegralEtaQuotient,
    SingularLogarithm,
    TruncationExceedsData,
    SeriesDivergenceGuardTripped,
    OutsideValidityRegion,
    InvalidRationalLiteral,
    InsufficientCoefficients,
    InconsistentCoveringData,
    InvalidConfiguration,
    InvalidEvaluationPoint,
)
from .rationals import Rational, RationalField, format_rational, parse_rational

__all__ = [
    "handle_command_error",
    "is_error_response",
    "wrap_command_with_error_handling",
    "PunctureMetricError",
    "InvalidBellIndex",
    "SeriesPreconditionViolated",
    "NonInvertibleLeadingCoefficient",
    "UnsupportedLevel",
    "NonIntegralEtaQuotient",
    "SingularLogarithm",
    "TruncationExceedsData",
    "SeriesDivergenceGuardTripped",
    "OutsideValidityRegion",
    "InvalidRationalLiteral",
    "InsufficientCoefficients",
    "InconsistentCoveringData",
    "InvalidConfiguration",
    "InvalidEvaluationPoint",
    "Rational",
    "RationalField",
    "format_rational",
    "parse_rational",
]
