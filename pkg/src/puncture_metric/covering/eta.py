import logging

from fractions import Fraction
from math import lcm

from .entities import EtaQuotientSpec
from ..series import TruncatedSeries, series_mul, series_pow, series_scale
from ..utils import NonIntegralEtaQuotient, parse_rational

logger = logging.getLogger(__name__)

# lambda(tau) = 16 eta(tau/2)^8 eta(2 tau)^16 / eta(tau)^24, expanded in q_2
LAMBDA_ETA_QUOTIENT = EtaQuotientSpec.of(("1/2", 8), (2, 16), (1, -24), multiplier=16)
# (eta(3 tau) / eta(tau/3))^3, expanded in q_3
GAMMA3_ETA_QUOTIENT = EtaQuotientSpec.of((3, 3), ("1/3", -3))


def smallest_integral_scale(spec: EtaQuotientSpec) -> int:
    """Least ``k`` making every ``s * k`` and the leading power ``k * sum e s / 24`` integral."""
    denominators = [f.scale.denominator for f in spec.factors]
    denominators.append(spec.leading_q_power.denominator)
    return lcm(1, *denominators)


def _euler_product(step: int, order: int) -> TruncatedSeries:
    """``prod_{n>=1} (1 - x^(step n))`` below degree ``order``."""
    dense = [Fraction(0)] * order
    if order:
        dense[0] = Fraction(1)
    n = 1
    while step * n < order:
        shift = step * n
        for degree in range(order - 1, shift - 1, -1):
            dense[degree] -= dense[degree - shift]
        n += 1
    return TruncatedSeries.from_dense(dense, order)


def eta_quotient_expansion(
    spec: EtaQuotientSpec, order: int, scale_k: Fraction | int | str | None = None
) -> TruncatedSeries:
    """
    Expand ``multiplier * prod eta(s_i tau)^(e_i)`` in ``q_k = exp(2 pi i tau / k)``
    below degree ``order``.

    Each ``eta(s tau)`` contributes ``q_k^(s k / 24) prod_n (1 - q_k^(s k n))``; the
    prefactors are collected into one leading power which must be a nonnegative integer.
    Without ``scale_k`` the smallest integral ``k`` is used.

    :raises NonIntegralEtaQuotient: if some ``s k`` or the leading power is not an integer,
        or if the leading power is negative.
    """
    k = smallest_integral_scale(spec) if scale_k is None else parse_rational(scale_k)
    leading = spec.leading_q_power * k
    if leading.denominator != 1:
        raise NonIntegralEtaQuotient(f"leading power {leading} of q_{k} is fractional")
    if leading < 0:
        raise NonIntegralEtaQuotient(f"leading power {leading} of q_{k} is negative")
    shift = int(leading)

    body_order = max(order - shift, 0)
    body = TruncatedSeries.monomial(0, body_order)
    for factor in spec.factors:
        step = factor.scale * k
        if step.denominator != 1:
            raise NonIntegralEtaQuotient(f"eta({factor.scale} tau) is fractional in q_{k}")
        if factor.exponent == 0 or body_order == 0:
            continue
        body = series_mul(body, series_pow(_euler_product(int(step), body_order), factor.exponent))

    dense = [Fraction(0)] * shift + series_scale(body, spec.multiplier).dense()
    logger.debug(f"Expanded eta quotient in q_{k} below degree {order}")
    return TruncatedSeries.from_dense(dense[:order], order)
