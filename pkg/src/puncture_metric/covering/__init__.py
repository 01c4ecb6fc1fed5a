from .coefficients import covering_from_coefficients, invert_covering_series, log_series_coefficients
from .datasets import (
    BUILTIN_EXAMPLES,
    builtin_covering,
    builtin_coverings,
    gamma3_covering,
    lambda_covering,
)
from .entities import SUPPORTED_LEVELS, USER_SUPPLIED, CoveringData, EtaFactor, EtaQuotientSpec
from .eta import (
    GAMMA3_ETA_QUOTIENT,
    LAMBDA_ETA_QUOTIENT,
    eta_quotient_expansion,
    smallest_integral_scale,
)
from .recursion import eisenstein_residuals, eisenstein_target, solve_covering_coefficients
from .sigma import sigma3

__all__ = [
    "covering_from_coefficients",
    "invert_covering_series",
    "log_series_coefficients",
    "BUILTIN_EXAMPLES",
    "builtin_covering",
    "builtin_coverings",
    "gamma3_covering",
    "lambda_covering",
    "SUPPORTED_LEVELS",
    "USER_SUPPLIED",
    "CoveringData",
    "EtaFactor",
    "EtaQuotientSpec",
    "GAMMA3_ETA_QUOTIENT",
    "LAMBDA_ETA_QUOTIENT",
    "eta_quotient_expansion",
    "smallest_integral_scale",
    "eisenstein_residuals",
    "eisenstein_target",
    "solve_covering_coefficients",
    "sigma3",
]
