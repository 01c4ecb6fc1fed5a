"""
Asymptotic expansion of the Kobayashi-Royden metric near the puncture at 0:

    chi_M(p; v) = |1 + sum_{m=1}^{M} R_m(p)| / (|p| |log|b_1 p||) * ||v||

with ``L = log|b_1 p|`` and

    C_m(p) = sum_{k=1}^{m} (-1)^k k! / L^k * B_{m,k}(Re(l_1 p), ..., Re(l_{m-k+1} p^(m-k+1)))
    R_m(p) = sum_{k=1}^{m-1} l_k C_{m-k} p^k / ((k-1)! (m-k)!) + l_m p^m / (m-1)! + C_m / m!
"""

import logging

from fractions import Fraction
from typing import Any

from .entities import ComplexPoint, MetricValue
from ..covering import CoveringData
from ..series import factorial, partial_bell, to_context
from ..utils import (
    InvalidEvaluationPoint,
    OutsideValidityRegion,
    SeriesPreconditionViolated,
    SingularLogarithm,
    TruncationExceedsData,
)

logger = logging.getLogger(__name__)

DEFAULT_VALIDITY_RADIUS = Fraction(1, 4)


def check_truncation(M: int, cov: CoveringData) -> None:
    if isinstance(M, bool) or M < 0:
        raise SeriesPreconditionViolated("truncation", f"M must be a nonnegative integer, got {M}")
    if M > cov.max_truncation:
        raise TruncationExceedsData(M, cov.max_truncation)


def log_modulus(
    p: ComplexPoint,
    cov: CoveringData,
    ctx: Any,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
) -> tuple[Any, Any]:
    """
    Return ``(p, log|b_1 p|)`` in ``ctx``.

    :raises SingularLogarithm: if ``|b_1 p| = 1``.
    :raises OutsideValidityRegion: if ``|b_1 p|`` exceeds ``validity_radius``.
    """
    z = p.value(ctx)
    if z == 0:
        raise InvalidEvaluationPoint("p must be nonzero")
    modulus = abs(to_context(cov.b[0], ctx) * z)
    if modulus == 1:
        raise SingularLogarithm(modulus)
    if validity_radius is not None and modulus > to_context(validity_radius, ctx):
        raise OutsideValidityRegion(modulus, validity_radius)
    return z, ctx.log(modulus)


def _c_terms(cov: CoveringData, z: Any, log_term: Any, ctx: Any, upto: int) -> list[Any]:
    """``C_0 .. C_upto`` at ``z``; ``C_0`` is 0."""
    if upto > len(cov.l):
        raise TruncationExceedsData(upto, len(cov.l))
    real_parts = [ctx.re(to_context(cov.l[j - 1], ctx) * z**j) for j in range(1, upto + 1)]
    terms = [ctx.mpf(0)]
    for m in range(1, upto + 1):
        total = ctx.mpf(0)
        for k in range(1, m + 1):
            sign = -1 if k % 2 else 1
            total += sign * factorial(k) * partial_bell(m, k, real_parts[:m]) / log_term**k
        terms.append(total)
    return terms


def _r_term(cov: CoveringData, z: Any, c_terms: list[Any], m: int, ctx: Any) -> Any:
    total = ctx.mpc(0)
    for k in range(1, m):
        total += (
            to_context(cov.l[k - 1], ctx)
            * c_terms[m - k]
            * z**k
            / (factorial(k - 1) * factorial(m - k))
        )
    total += to_context(cov.l[m - 1], ctx) * z**m / factorial(m - 1)
    return total + c_terms[m] / factorial(m)


def c_m_term(
    m: int,
    p: ComplexPoint,
    cov: CoveringData,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
) -> Any:
    if m < 0:
        raise SeriesPreconditionViolated("c_m_term", "m must be nonnegative")
    ctx = p.context()
    z, log_term = log_modulus(p, cov, ctx, validity_radius)
    return _c_terms(cov, z, log_term, ctx, m)[m]


def r_m_term(
    m: int,
    p: ComplexPoint,
    cov: CoveringData,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
) -> Any:
    if m < 1:
        raise SeriesPreconditionViolated("r_m_term", "m must be at least 1")
    ctx = p.context()
    z, log_term = log_modulus(p, cov, ctx, validity_radius)
    return _r_term(cov, z, _c_terms(cov, z, log_term, ctx, m), m, ctx)


def metric_expansion_eval(
    p: ComplexPoint,
    v_norm: float | str,
    cov: CoveringData,
    M: int,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
) -> MetricValue:
    """
    Evaluate ``chi_M(p; v)`` with the terms ``R_1 .. R_M`` kept in the breakdown.

    :raises TruncationExceedsData: if ``M`` exceeds ``cov.order - 1``.
    :raises SingularLogarithm: if ``|b_1 p| = 1``.
    :raises OutsideValidityRegion: if ``|b_1 p|`` exceeds ``validity_radius``.
    """
    check_truncation(M, cov)
    ctx = p.context()
    norm = ctx.mpf(v_norm)
    if norm < 0:
        raise InvalidEvaluationPoint(f"v_norm must be nonnegative, got {v_norm}")
    z, log_term = log_modulus(p, cov, ctx, validity_radius)
    c_terms = _c_terms(cov, z, log_term, ctx, M)
    breakdown = tuple(_r_term(cov, z, c_terms, m, ctx) for m in range(1, M + 1))
    value = abs(1 + ctx.fsum(breakdown)) / (abs(z) * abs(log_term)) * norm
    logger.debug(f"metric_expansion_eval: p={p} M={M} value={value}")
    return MetricValue(
        value=value,
        truncation_order=M,
        term_breakdown=breakdown,
        p=p,
        v_norm=str(v_norm),
        method="expansion",
    )
