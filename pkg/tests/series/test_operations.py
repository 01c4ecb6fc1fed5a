from fractions import Fraction

import mpmath
import pytest

from puncture_metric.series import (
    TruncatedSeries,
    compare_series,
    evaluate_derivative,
    evaluate_series,
    series_add,
    series_compose,
    series_exp,
    series_log_unit,
    series_mul,
    series_pow,
    series_reciprocal,
    series_valuation,
)
from puncture_metric.utils import SeriesPreconditionViolated


def dense(*values, order=None):
    return TruncatedSeries.from_dense([Fraction(v) for v in values], order)


def test_truncated_series_length_invariant():
    with pytest.raises(SeriesPreconditionViolated):
        TruncatedSeries(coeffs=(1, 2), order=3)


def test_coefficient_beyond_order_is_unknown():
    series = dense(1, 2, 3)
    assert series.coefficient(2) == 3
    with pytest.raises(SeriesPreconditionViolated):
        series.coefficient(3)


def test_rational_coefficients_serialise_as_strings():
    series = TruncatedSeries.from_dense(["1/2", 3, "-4/6"])
    assert series.model_dump(mode="json")["coeffs"] == ["1/2", "3", "-2/3"]


def test_add_keeps_smaller_order():
    total = series_add(dense(1, 1, 1), dense(1, 2, 3, 4, 5))
    assert total.order == 3
    assert total.dense() == [2, 3, 4]


def test_mul():
    product = series_mul(dense(1, 1, 0, 0), dense(1, -1, 0, 0))
    assert product.dense() == [1, 0, -1, 0]
    assert (dense(1, 1, 0, 0) * dense(1, -1, 0, 0)).dense() == product.dense()


def test_mul_order_tracks_valuation():
    # x^2 * (1 + x + O(x^3)) is known below x^5
    assert series_mul(dense(0, 0, 1, 0, 0, 0), dense(1, 1, 0)).order == 5


def test_compose():
    outer = dense(0, 1, 1, 0)
    inner = dense(0, 2, 0, 0)
    assert series_compose(outer, inner).dense() == [0, 2, 4, 0]
    assert outer(inner).dense() == [0, 2, 4, 0]


def test_compose_rejects_inner_constant():
    with pytest.raises(SeriesPreconditionViolated):
        series_compose(dense(0, 1), dense(1, 1))


def test_reciprocal():
    assert series_reciprocal(dense(1, -1, 0, 0)).dense() == [1, 1, 1, 1]
    with pytest.raises(SeriesPreconditionViolated):
        series_reciprocal(dense(0, 1))


def test_pow():
    assert series_pow(dense(1, 1, 0, 0, 0), 3).dense() == [1, 3, 3, 1, 0]
    assert series_pow(dense(1, 1, 0, 0), -1).dense() == [1, -1, 1, -1]
    assert series_pow(dense(2, 5, 7), 0).dense() == [1, 0, 0]


def test_log_unit():
    assert series_log_unit(dense(1, 1, 0, 0, 0)).dense() == [
        0,
        1,
        Fraction(-1, 2),
        Fraction(1, 3),
        Fraction(-1, 4),
    ]


def test_exp_inverts_log():
    unit = dense(1, Fraction(1, 2), Fraction(-1, 3), 5, 0, 2)
    assert compare_series(series_exp(series_log_unit(unit)), unit).equal


def test_exp_and_log_preconditions():
    with pytest.raises(SeriesPreconditionViolated):
        series_log_unit(dense(2, 1))
    with pytest.raises(SeriesPreconditionViolated):
        series_exp(dense(1, 1))


def test_valuation():
    assert series_valuation(dense(0, 0, 1, 1)) == 2
    assert series_valuation(dense(0, 0, 0)) == 3


def test_compare_series_reports_mismatching_degrees():
    check = compare_series(dense(1, 2, 3), dense(1, 0, 3, 4))
    assert check.order == 3
    assert check.mismatches == (1,)
    assert not check.equal


def test_evaluate_series_in_context():
    ctx = mpmath.MPContext()
    ctx.dps = 30
    series = dense(1, 2, 3)
    assert evaluate_series(series, ctx.mpf("0.5"), ctx) == ctx.mpf("2.75")
    assert evaluate_derivative(series, ctx.mpf("0.5"), ctx) == 5
