import logging

from typing import Any

from .entities import ComplexPoint, MetricValue
from ..covering import CoveringData
from ..series import to_context
from ..utils import InvalidEvaluationPoint, SeriesDivergenceGuardTripped, SingularLogarithm

logger = logging.getLogger(__name__)

DEFAULT_DIVERGENCE_RATIO = 1.0e-3


def metric_direct_eval(
    p: ComplexPoint,
    v_norm: float | str,
    cov: CoveringData,
    divergence_ratio: float = DEFAULT_DIVERGENCE_RATIO,
) -> MetricValue:
    """
    ``|q'(p)| / (|q(p)| |log|q(p)||) * ||v||`` from the truncated inverse series
    ``q(f) = sum b_m f^m``.

    The last retained terms of ``q`` and ``q'`` must stay below ``divergence_ratio`` times
    the partial sums, otherwise the truncated series is not trusted at ``p``.

    :raises SeriesDivergenceGuardTripped: when the tail test fails.
    :raises SingularLogarithm: when ``|q(p)| = 1``.
    """
    ctx = p.context()
    norm = ctx.mpf(v_norm)
    if norm < 0:
        raise InvalidEvaluationPoint(f"v_norm must be nonnegative, got {v_norm}")
    z = p.value(ctx)
    if z == 0:
        raise InvalidEvaluationPoint("p must be nonzero")

    b = [to_context(value, ctx) for value in cov.b]
    terms = [b[m - 1] * z**m for m in range(1, cov.order + 1)]
    derivative_terms = [m * b[m - 1] * z ** (m - 1) for m in range(1, cov.order + 1)]
    q = ctx.fsum(terms)
    q_prime = ctx.fsum(derivative_terms)

    ratio = ctx.mpf(divergence_ratio)
    if cov.order > 1:
        if abs(terms[-1]) >= ratio * abs(q):
            raise SeriesDivergenceGuardTripped(
                f"last term of q is {abs(terms[-1] / q)} of the partial sum at p={p}"
            )
        if abs(derivative_terms[-1]) >= ratio * abs(q_prime):
            raise SeriesDivergenceGuardTripped(
                f"last term of q' is {abs(derivative_terms[-1] / q_prime)} of the partial sum at p={p}"
            )

    modulus = abs(q)
    if modulus == 1 or modulus == 0:
        raise SingularLogarithm(modulus)
    value = abs(q_prime) / (modulus * abs(ctx.log(modulus))) * norm
    logger.debug(f"metric_direct_eval: p={p} value={value}")
    return MetricValue(
        value=value,
        truncation_order=cov.order,
        term_breakdown=tuple(terms),
        p=p,
        v_norm=str(v_norm),
        method="direct",
    )
