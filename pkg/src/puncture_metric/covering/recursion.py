"""
Degree-by-degree solve of ``1 - q_N^2 {f, q_N} = E_4(q_N^N)`` for the covering map
``f(q_N) = c_1 q_N + c_2 q_N^2 + ...`` at levels ``N = 2, 3, 4, 5``.

Writing ``(log f')' = sum l~_{m+1} q^m / m!``, the coefficient of ``q_N^(m+2)`` gives

    2 l~_{m+2} / m! - sum_{k=0}^{m} l~_{k+1} l~_{m-k+1} / (k! (m-k)!) = -240 sigma3((m+2)/N)

(zero when ``N`` does not divide ``m + 2``). The equation is linear in ``l~_{m+2}``, and
``l~_{m+2} = (m+3)! c_{m+3} / c_1 + (terms in c_1 .. c_{m+2})``, so step ``m`` fixes
``c_{m+3}``.
"""

import logging

from fractions import Fraction

from .coefficients import covering_from_coefficients
from .entities import SUPPORTED_LEVELS, CoveringData
from .sigma import sigma3
from ..series import factorial, log_derivative_coefficients, schwarzian
from ..utils import (
    NonInvertibleLeadingCoefficient,
    SeriesPreconditionViolated,
    UnsupportedLevel,
    parse_rational,
)

logger = logging.getLogger(__name__)


def _check_level(level) -> int:
    if isinstance(level, bool) or not isinstance(level, int) or level not in SUPPORTED_LEVELS:
        raise UnsupportedLevel(level)
    return level


def eisenstein_target(level: int, m: int) -> Fraction:
    """Coefficient of ``q_N^(m+2)`` in ``q_N^2 {f, q_N}`` forced by ``E_4``."""
    if (m + 2) % level == 0:
        return Fraction(-240 * sigma3((m + 2) // level))
    return Fraction(0)


def solve_covering_coefficients(
    N: int,
    c1: Fraction | int | str,
    c2: Fraction | int | str,
    order: int,
    scale_k: Fraction | int | str | None = None,
) -> CoveringData:
    """
    Solve for ``c_3 .. c_order`` from the free data ``c_1, c_2`` and return the full
    covering data (``b`` and ``l`` derived). ``scale_k`` defaults to ``N``.

    :raises UnsupportedLevel: if ``N`` is not one of 2, 3, 4, 5.
    :raises NonInvertibleLeadingCoefficient: if ``c1 = 0``.
    """
    level = _check_level(N)
    c1 = parse_rational(c1)
    c2 = parse_rational(c2)
    if c1 == 0:
        raise NonInvertibleLeadingCoefficient("c1")
    if isinstance(order, bool) or order < 2:
        raise SeriesPreconditionViolated("solve_covering_coefficients", "order must be at least 2")

    c = [c1, c2]
    for m in range(0, order - 2):
        # l~_1 .. l~_{m+1} are already fixed by c_1 .. c_{m+2}
        known = log_derivative_coefficients(c + [Fraction(0)], m + 2)
        square = sum(
            (
                known[k] * known[m - k] / (factorial(k) * factorial(m - k))
                for k in range(m + 1)
            ),
            Fraction(0),
        )
        required = (eisenstein_target(level, m) + square) * factorial(m) / 2
        rest = known[m + 1]
        c_next = (required - rest) * c1 / factorial(m + 3)
        c.append(c_next)
        logger.debug(f"solve_covering_coefficients: N={level} c_{m + 3} = {c_next}")

    logger.info(f"Solved covering coefficients for N={level} up to c_{order}")
    return covering_from_coefficients(
        c, scale_k=level if scale_k is None else scale_k, level_N=level
    )


def eisenstein_residuals(cov: CoveringData, level_N: int | None = None) -> list[Fraction]:
    """
    Per-degree difference between ``1 - q_N^2 {f, q_N}`` and ``1 + 240 sum sigma3(m) q_N^(N m)``
    on the degrees the data determine (``0 .. order - 1``). All zero for data that satisfy
    the Eisenstein relation at this level.
    """
    level = _check_level(cov.level_N if level_N is None else level_N)
    s = schwarzian(cov.c_series())
    residuals = [Fraction(0), Fraction(0)]
    for m, value in enumerate(s.dense()):
        residuals.append(-value + eisenstein_target(level, m))
    return residuals[: max(cov.order, 2)]
