from .checks import AbstractCheck, default_checks
from .entities import CheckResult, VerificationContext, VerificationReport
from .runner import VerificationRunner
from .sampling import random_rational, random_rational_series

__all__ = [
    "AbstractCheck",
    "default_checks",
    "CheckResult",
    "VerificationContext",
    "VerificationReport",
    "VerificationRunner",
    "random_rational",
    "random_rational_series",
]
