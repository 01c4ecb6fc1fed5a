import logging

from fractions import Fraction
from typing import Sequence

from .entities import USER_SUPPLIED, CoveringData
from ..series import factorial, log_bell_coefficients, partial_bell
from ..utils import InsufficientCoefficients, NonInvertibleLeadingCoefficient, parse_rational

logger = logging.getLogger(__name__)


def invert_covering_series(c: Sequence[Fraction | int | str], order: int) -> list[Fraction]:
    """
    Coefficients ``b_1 .. b_order`` of the inverse ``q(f) = sum b_m f^m`` of
    ``f(q) = sum c_m q^m``; ``c[0]`` is ``c_1``.

    Closed form in Bell polynomials, with ``b_1 = 1/c_1`` and for ``m >= 2``

        b_m = 1/m! * sum_{k=1}^{m-1} (-1)^k / c_1^(m+k) * B_{m+k-1,k}(0, 2! c_2, ..., m! c_m)

    :raises NonInvertibleLeadingCoefficient: if ``c_1 = 0``.
    :raises InsufficientCoefficients: if fewer than ``order`` coefficients are given.
    """
    if len(c) < order:
        raise InsufficientCoefficients("invert_covering_series", order, len(c))
    values = [parse_rational(v) for v in c[:order]]
    if not values or values[0] == 0:
        raise NonInvertibleLeadingCoefficient("c1")

    c1 = values[0]
    t = [Fraction(0)] + [factorial(j) * values[j - 1] for j in range(2, order + 1)]
    b = [1 / c1]
    for m in range(2, order + 1):
        acc = Fraction(0)
        for k in range(1, m):
            term = partial_bell(m + k - 1, k, t[:m]) / c1 ** (m + k)
            acc += -term if k % 2 else term
        b.append(acc / factorial(m))
    return b


def log_series_coefficients(b: Sequence[Fraction | int | str], order: int) -> list[Fraction]:
    """
    ``l_1 .. l_order`` of ``log(q / (b_1 f)) = sum_{m>=1} l_m f^m / m!``; ``b[0]`` is ``b_1``.

    ``l_m`` involves ``b_2 .. b_{m+1}``, hence ``b`` must hold at least ``order + 1`` values.

    :raises NonInvertibleLeadingCoefficient: if ``b_1 = 0``.
    """
    if len(b) < order + 1:
        raise InsufficientCoefficients("log_series_coefficients", order + 1, len(b))
    values = [parse_rational(v) for v in b[: order + 1]]
    if values[0] == 0:
        raise NonInvertibleLeadingCoefficient("b1")
    if order == 0:
        return []
    t = [factorial(j) * values[j] for j in range(1, order + 1)]
    return log_bell_coefficients(t, order, scale=values[0])


def covering_from_coefficients(
    c: Sequence[Fraction | int | str],
    scale_k: Fraction | int | str = 1,
    level_N: int | str = USER_SUPPLIED,
) -> CoveringData:
    """Covering data from user-supplied ``c_1 .. c_n``; ``b`` and ``l`` are derived exactly."""
    values = [parse_rational(v) for v in c]
    order = len(values)
    if order == 0:
        raise InsufficientCoefficients("covering_from_coefficients", 1, 0)
    b = invert_covering_series(values, order)
    l = log_series_coefficients(b, order - 1)
    logger.debug(f"Built covering data of order {order} for level {level_N}")
    return CoveringData(
        level_N=level_N, scale_k=parse_rational(scale_k), c=values, b=b, l=l, order=order
    )
