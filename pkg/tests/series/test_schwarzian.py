from fractions import Fraction

import pytest

from puncture_metric.series import (
    TruncatedSeries,
    compare_series,
    log_derivative_coefficients,
    schwarzian,
    schwarzian_direct,
)
from puncture_metric.utils import (
    InsufficientCoefficients,
    NonInvertibleLeadingCoefficient,
    SeriesPreconditionViolated,
)


def test_schwarzian_of_quadratic():
    # {x + x^2, x} = -12 / (1 + 2x)^2
    s = schwarzian(TruncatedSeries.from_dense([0, 1, 1], order=8))
    assert s.order == 5
    assert s.dense() == [-12, 48, -144, 384, -960]


def test_schwarzian_of_identity_vanishes():
    s = schwarzian(TruncatedSeries.from_dense([0, 1], order=6))
    assert s.order == 3
    assert s.is_zero()


def test_schwarzian_of_lambda_matches_eisenstein():
    s = schwarzian(TruncatedSeries.from_dense([0, 16, -128, 704, -3072]))
    assert s.dense() == [-240, 0]


def test_short_series_gives_empty_schwarzian():
    assert schwarzian(TruncatedSeries.from_dense([0, 1, 5])).order == 0


def test_two_paths_agree(random_series):
    for c in random_series:
        f = TruncatedSeries.from_dense([0, *c])
        assert compare_series(schwarzian(f), schwarzian_direct(f)).equal


def test_log_derivative_coefficients():
    assert log_derivative_coefficients([16, -128, 704], 2) == [-16, 8]
    with pytest.raises(InsufficientCoefficients):
        log_derivative_coefficients([16, -128], 2)


def test_preconditions():
    with pytest.raises(SeriesPreconditionViolated):
        schwarzian(TruncatedSeries.from_dense([1, 1, 0, 0]))
    with pytest.raises(NonInvertibleLeadingCoefficient):
        schwarzian(TruncatedSeries.from_dense([0, 0, Fraction(1, 2), 0]))
