from fractions import Fraction
from typing import Sequence

from .entities import ExpCoefficients
from ..series import TruncatedSeries, factorial, partial_bell, series_mul
from ..utils import InsufficientCoefficients, parse_rational


def exp_reciprocal_coefficients(l: Sequence[Fraction | int | str], order: int) -> ExpCoefficients:
    """
    ``c~_m = sum_{k=1}^{m} (-1)^k k! B_{m,k}(l_1, 2 l_2, ..., (m-k+1) l_{m-k+1})``
    for ``m = 1 .. order``.
    """
    if len(l) < order:
        raise InsufficientCoefficients("exp_reciprocal_coefficients", order, len(l))
    args = [j * parse_rational(l[j - 1]) for j in range(1, order + 1)]
    c_tilde = []
    for m in range(1, order + 1):
        total = Fraction(0)
        for k in range(1, m + 1):
            term = factorial(k) * partial_bell(m, k, args[:m])
            total += -term if k % 2 else term
        c_tilde.append(total)
    return ExpCoefficients(c_tilde=c_tilde)


def reciprocal_identity_residual(
    l: Sequence[Fraction | int | str], coefficients: ExpCoefficients
) -> list[Fraction]:
    """Coefficients of ``(1 + sum m l_m f^m / m!)(1 + sum c~_m f^m / m!) - 1``."""
    order = coefficients.order + 1
    if len(l) < coefficients.order:
        raise InsufficientCoefficients("reciprocal_identity_residual", coefficients.order, len(l))
    unit = TruncatedSeries.from_dense(
        [Fraction(1)]
        + [m * parse_rational(l[m - 1]) / factorial(m) for m in range(1, order)],
        order,
    )
    reciprocal = TruncatedSeries.from_dense(
        [Fraction(1)]
        + [
            parse_rational(c) / factorial(m)
            for m, c in enumerate(coefficients.c_tilde, start=1)
        ],
        order,
    )
    product = series_mul(unit, reciprocal).dense()
    return [value - (1 if degree == 0 else 0) for degree, value in enumerate(product)]
