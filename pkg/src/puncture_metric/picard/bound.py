"""
Little-Picard radius bound near the puncture at 0: a holomorphic map from the disc of
radius ``R`` into the punctured sphere sending 0 to ``p`` with unit derivative exists only
for ``R < 1 / chi(p; 1)``, which expands as

    |p| |L| * |1 + sum_{m=1}^{M} ( c~_m p^m / m!
                                   + sum_{k=1}^{m} c~_{m-k} p^(m-k) Re(l_k p^k) / ((m-k)! k! L) )|

with ``L = log|b_1 p|`` and ``c~_0 = 1``.
"""

import logging

from fractions import Fraction

from .coefficients import exp_reciprocal_coefficients
from .entities import RadiusBound
from ..covering import CoveringData
from ..metric import (
    DEFAULT_DIVERGENCE_RATIO,
    DEFAULT_VALIDITY_RADIUS,
    ComplexPoint,
    check_truncation,
    log_modulus,
    metric_direct_eval,
)
from ..series import factorial, to_context
from ..utils import SeriesDivergenceGuardTripped, SingularLogarithm

logger = logging.getLogger(__name__)


def picard_radius_bound(
    p: ComplexPoint,
    cov: CoveringData,
    M: int,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
    divergence_ratio: float = DEFAULT_DIVERGENCE_RATIO,
    with_direct: bool = True,
) -> RadiusBound:
    """
    Evaluate the radius bound at ``p`` with ``M`` correction terms.

    With ``with_direct`` the reciprocal of the direct-series metric is attached for
    comparison; a tripped divergence guard leaves it empty instead of failing the bound.
    """
    check_truncation(M, cov)
    ctx = p.context()
    z, log_term = log_modulus(p, cov, ctx, validity_radius)

    c_tilde = [to_context(c, ctx) for c in exp_reciprocal_coefficients(cov.l, M).with_unit()]
    real_parts = [ctx.re(to_context(cov.l[k - 1], ctx) * z**k) for k in range(1, M + 1)]
    correction = ctx.mpc(0)
    for m in range(1, M + 1):
        correction += c_tilde[m] * z**m / factorial(m)
        for k in range(1, m + 1):
            correction += (
                c_tilde[m - k]
                * z ** (m - k)
                * real_parts[k - 1]
                / (factorial(m - k) * factorial(k) * log_term)
            )
    leading = abs(z) * abs(log_term)
    bound = leading * abs(1 + correction)

    direct_reciprocal = relative_gap = None
    if with_direct:
        try:
            direct = metric_direct_eval(p, 1, cov, divergence_ratio)
            direct_reciprocal = 1 / direct.value
            relative_gap = abs(bound - direct_reciprocal) / direct_reciprocal
        except (SeriesDivergenceGuardTripped, SingularLogarithm) as e:
            logger.warning(f"Direct reciprocal unavailable at p={p}: {e}")

    return RadiusBound(
        bound=bound,
        p=p,
        truncation_order=M,
        leading_term=leading,
        direct_reciprocal=direct_reciprocal,
        relative_gap=relative_gap,
    )


def lambda_closed_form_radius(p: ComplexPoint):
    """Closed three-term bound for the lambda covering: ``|p L + p Re(p) / 2 - p^2 L|``, ``L = log|p/16|``."""
    ctx = p.context()
    z = p.value(ctx)
    log_term = ctx.log(abs(z) / 16)
    return abs(z * log_term + z * ctx.re(z) / 2 - z**2 * log_term)
