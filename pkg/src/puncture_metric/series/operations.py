import logging

from fractions import Fraction
from typing import Any

from .bell import factorial
from .entities import SeriesCheck, TruncatedSeries
from ..utils import SeriesPreconditionViolated

logger = logging.getLogger(__name__)


def _mul_dense(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_valuation(a: TruncatedSeries) -> int:
    """Lowest degree with a nonzero coefficient, or ``order`` when none is known."""
    for degree, c in enumerate(a.dense()):
        if c != 0:
            return degree
    return a.order


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries.from_dense(
        [x + y for x, y in zip(a.dense()[:order], b.dense()[:order])], order
    )


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries.from_dense(
        [x - y for x, y in zip(a.dense()[:order], b.dense()[:order])], order
    )


def series_scale(a: TruncatedSeries, factor: Fraction | int) -> TruncatedSeries:
    factor = Fraction(factor)
    return TruncatedSeries.from_dense([factor * c for c in a.dense()], a.order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product; the result is known up to ``min(a.order + v(b), b.order + v(a))``."""
    order = min(a.order + series_valuation(b), b.order + series_valuation(a))
    return TruncatedSeries.from_dense(_mul_dense(a.dense(), b.dense(), order), order)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """
    ``outer(inner(x))`` by Horner's rule.

    With ``v`` the valuation of ``inner`` and ``j0`` the lowest positive degree present in
    ``outer``, unknown terms of ``outer`` start at degree ``outer.order * v`` and unknown
    terms of ``inner`` start at degree ``inner.order + (j0 - 1) * v``.
    """
    if inner.order == 0 or inner.coefficient(0) != 0:
        raise SeriesPreconditionViolated(
            "series_compose", "inner series must have a known, zero constant term"
        )
    v = series_valuation(inner)
    outer_dense = outer.dense()
    order = outer.order * v
    nonconstant = [j for j, c in enumerate(outer_dense) if j >= 1 and c != 0]
    if nonconstant:
        order = min(order, inner.order + (nonconstant[0] - 1) * v)
    if order == 0:
        return TruncatedSeries(order=0)

    inner_dense = inner.dense()[:order]
    acc = [Fraction(0)] * order
    for c in reversed(outer_dense):
        acc = _mul_dense(acc, inner_dense, order)
        acc[0] += c
    return TruncatedSeries.from_dense(acc, order)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    order = max(a.order - 1, 0)
    dense = a.dense()
    return TruncatedSeries.from_dense([m * dense[m] for m in range(1, a.order)], order)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    if a.order == 0 or a.coefficient(0) == 0:
        raise SeriesPreconditionViolated(
            "series_reciprocal", "constant term must be known and nonzero"
        )
    dense = a.dense()
    inverse_lead = 1 / dense[0]
    out = [inverse_lead]
    for n in range(1, a.order):
        acc = sum((dense[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
        out.append(-inverse_lead * acc)
    return TruncatedSeries.from_dense(out, a.order)


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent < 0:
        return series_pow(series_reciprocal(a), -exponent)
    result = TruncatedSeries.monomial(0, a.order)
    base = a
    while exponent > 0:
        if exponent % 2 == 1:
            result = series_mul(result, base)
        exponent //= 2
        if exponent:
            base = series_mul(base, base)
    return result


def _require_constant(a: TruncatedSeries, value: int, operation: str) -> None:
    if a.order == 0 or a.coefficient(0) != value:
        raise SeriesPreconditionViolated(
            operation, f"constant term must be known and equal to {value}"
        )


def series_log_unit(a: TruncatedSeries) -> TruncatedSeries:
    """``log(a)`` for ``a = 1 + z``, as the Mercator series composed with ``z``."""
    _require_constant(a, 1, "series_log_unit")
    z = series_sub(a, TruncatedSeries.monomial(0, a.order))
    mercator = TruncatedSeries.from_dense(
        [Fraction(0)] + [Fraction((-1) ** (m + 1), m) for m in range(1, a.order)], a.order
    )
    return series_compose(mercator, z).truncate(a.order)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    _require_constant(a, 0, "series_exp")
    exponential = TruncatedSeries.from_dense(
        [Fraction(1, factorial(m)) for m in range(a.order)], a.order
    )
    return series_compose(exponential, a).truncate(a.order)


def compare_series(a: TruncatedSeries, b: TruncatedSeries) -> SeriesCheck:
    """Coefficient-exact comparison on the common known range."""
    order = min(a.order, b.order)
    mismatches = [
        degree
        for degree, (x, y) in enumerate(zip(a.dense()[:order], b.dense()[:order]))
        if x != y
    ]
    return SeriesCheck(order=order, mismatches=mismatches)


def to_context(value: Fraction, ctx: Any) -> Any:
    """Explicit conversion of an exact rational into an mpmath context."""
    value = Fraction(value)
    return ctx.mpf(value.numerator) / value.denominator


def evaluate_series(a: TruncatedSeries, z: Any, ctx: Any) -> Any:
    """Horner evaluation of the known part of ``a`` at ``z`` in the mpmath context ``ctx``."""
    acc = ctx.mpf(0)
    for c in reversed(a.dense()):
        acc = acc * z + to_context(c, ctx)
    return acc


def evaluate_derivative(a: TruncatedSeries, z: Any, ctx: Any) -> Any:
    return evaluate_series(series_derivative(a), z, ctx)
