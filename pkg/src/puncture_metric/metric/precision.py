from enum import Enum

import mpmath

DOUBLE_PRECISION_BITS = 53
DEFAULT_EXTENDED_DPS = 50


class Precision(str, Enum):
    DOUBLE = "double"
    EXTENDED = "extended"


def make_context(
    precision: Precision | str = Precision.DOUBLE, dps: int = DEFAULT_EXTENDED_DPS
) -> mpmath.MPContext:
    """A private mpmath context, so concurrent evaluations never share precision state."""
    ctx = mpmath.MPContext()
    if Precision(precision) is Precision.DOUBLE:
        ctx.prec = DOUBLE_PRECISION_BITS
    else:
        ctx.dps = dps
    return ctx
