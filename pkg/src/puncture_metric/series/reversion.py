import logging

from fractions import Fraction

from .entities import TruncatedSeries
from ..utils import NonInvertibleLeadingCoefficient, SeriesPreconditionViolated

logger = logging.getLogger(__name__)


def invert_series_newton(c: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse ``b`` of ``c`` (``c(b(x)) = x``) by matching coefficients
    degree by degree.

    At degree ``n`` the coefficient of ``x^n`` in ``c(b(x))`` is ``c_1 b_n + e_n`` where
    ``e_n`` only involves ``b_1 .. b_{n-1}``, so ``b_n = -e_n / c_1``. A table of the powers
    ``b^j`` is extended one degree per step, which keeps the whole solve cubic in the order.
    This path shares no code with the Bell-polynomial reversion and is used as its oracle.

    :raises SeriesPreconditionViolated: if ``c`` has a nonzero constant term.
    :raises NonInvertibleLeadingCoefficient: if ``c_1 = 0``.
    """
    if c.order < 2:
        raise SeriesPreconditionViolated("invert_series_newton", "need c known through x^1")
    if c.coefficient(0) != 0:
        raise SeriesPreconditionViolated("invert_series_newton", "constant term must be zero")
    c1 = c.coefficient(1)
    if c1 == 0:
        raise NonInvertibleLeadingCoefficient("c1")

    top = c.order - 1
    cd = c.dense()
    b = [Fraction(0)] * (top + 1)
    b[1] = 1 / c1
    # powers[j][d] is the coefficient of x^d in b(x)^j
    powers = [[Fraction(0)] * (top + 1) for _ in range(top + 1)]
    powers[1][1] = b[1]
    for j in range(2, top + 1):
        powers[j][j] = b[1] ** j

    for n in range(2, top + 1):
        for j in range(2, n):
            powers[j][n] = sum(
                (b[i] * powers[j - 1][n - i] for i in range(1, n - j + 2)), Fraction(0)
            )
        e_n = sum((cd[j] * powers[j][n] for j in range(2, n + 1)), Fraction(0))
        b[n] = -e_n / c1
        powers[1][n] = b[n]
        logger.debug(f"invert_series_newton: b_{n} = {b[n]}")

    return TruncatedSeries.from_dense(b, c.order)
