import logging

from fractions import Fraction
from typing import Sequence

from .bell import factorial, log_bell_coefficients
from .entities import TruncatedSeries
from .operations import (
    series_derivative,
    series_mul,
    series_reciprocal,
    series_scale,
    series_sub,
)
from ..utils import (
    InsufficientCoefficients,
    NonInvertibleLeadingCoefficient,
    SeriesPreconditionViolated,
)

logger = logging.getLogger(__name__)


def log_derivative_coefficients(c: Sequence[Fraction], count: int) -> list[Fraction]:
    """
    The coefficients ``l~_1 .. l~_count`` of ``(log f')' = sum_{m>=0} l~_{m+1} q^m / m!``
    for ``f = sum c_m q^m``; ``c[0]`` is ``c_1``.

    ``l~_m = sum_k (-1)^(k-1) (k-1)! / c_1^k * B_{m,k}(2! c_2, ..., (m-k+2)! c_{m-k+2})``,
    so ``l~_m`` needs ``c_1 .. c_{m+1}``.
    """
    if len(c) < count + 1:
        raise InsufficientCoefficients("log_derivative_coefficients", count + 1, len(c))
    c1 = Fraction(c[0])
    if c1 == 0:
        raise NonInvertibleLeadingCoefficient("c1")
    t = [factorial(j + 1) * Fraction(c[j]) for j in range(1, count + 1)]
    return log_bell_coefficients(t, count, scale=c1)


def _check_schwarzian_input(f: TruncatedSeries, operation: str) -> None:
    if f.order < 2 or f.coefficient(0) != 0:
        raise SeriesPreconditionViolated(
            operation, "f must have a known, zero constant term and a known linear term"
        )
    if f.coefficient(1) == 0:
        raise NonInvertibleLeadingCoefficient("f1")


def schwarzian(f: TruncatedSeries) -> TruncatedSeries:
    """
    ``{f, q} = 2 (f''/f')' - (f''/f')^2`` from the expansion of ``(log f')'``:

        {f, q} = sum_m ( 2 l~_{m+2} / m! - sum_{k=0}^{m} l~_{k+1} l~_{m-k+1} / (k! (m-k)!) ) q^m

    A series known below degree ``N`` yields ``{f, q}`` below degree ``N - 3``.
    """
    _check_schwarzian_input(f, "schwarzian")
    order = max(f.order - 3, 0)
    if order == 0:
        return TruncatedSeries(order=0)

    c = f.dense()[1:]
    tl = log_derivative_coefficients(c, order + 1)
    coeffs = []
    for m in range(order):
        square = sum(
            (
                tl[k] * tl[m - k] / (factorial(k) * factorial(m - k))
                for k in range(m + 1)
            ),
            Fraction(0),
        )
        coeffs.append(2 * tl[m + 1] / factorial(m) - square)
    return TruncatedSeries.from_dense(coeffs, order)


def schwarzian_direct(f: TruncatedSeries) -> TruncatedSeries:
    """``{f, q}`` from the derivative formula, with series division for ``f''/f'``."""
    _check_schwarzian_input(f, "schwarzian_direct")
    first = series_derivative(f)
    second = series_derivative(first)
    ratio = series_mul(second, series_reciprocal(first))
    result = series_sub(series_scale(series_derivative(ratio), 2), series_mul(ratio, ratio))
    return result.truncate(max(f.order - 3, 0))
