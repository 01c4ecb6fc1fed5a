from fractions import Fraction

import pytest
import sympy

from puncture_metric.covering import (
    eisenstein_residuals,
    eisenstein_target,
    sigma3,
    solve_covering_coefficients,
)
from puncture_metric.utils import (
    NonInvertibleLeadingCoefficient,
    SeriesPreconditionViolated,
    UnsupportedLevel,
)


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 9), (3, 28), (6, 252), (12, 2044)])
def test_sigma3(m, expected):
    assert sigma3(m) == expected


def test_sigma3_matches_sympy_divisor_sigma():
    for m in range(1, 201):
        assert sigma3(m) == sympy.divisor_sigma(m, 3)


@pytest.mark.parametrize("m", [0, -3, 2.0, True])
def test_sigma3_rejects_non_positive_integers(m):
    with pytest.raises(SeriesPreconditionViolated):
        sigma3(m)


def test_eisenstein_target():
    assert eisenstein_target(2, 0) == -240
    assert eisenstein_target(2, 1) == 0
    assert eisenstein_target(2, 2) == -240 * 9
    assert eisenstein_target(3, 1) == -240
    assert eisenstein_target(5, 2) == 0


def test_lambda_coefficients(lambda_cov):
    assert lambda_cov.level_N == 2
    assert lambda_cov.scale_k == 2
    assert lambda_cov.c[:4] == (16, -128, 704, -3072)
    assert lambda_cov.b[:3] == (Fraction(1, 16), Fraction(1, 32), Fraction(21, 1024))
    assert lambda_cov.l[0] == Fraction(1, 2)


def test_gamma3_coefficients(gamma3_cov):
    assert gamma3_cov.level_N == 3
    assert gamma3_cov.scale_k == 3
    assert gamma3_cov.c[:4] == (1, 3, 9, 22)
    assert gamma3_cov.b[:4] == (1, -3, 9, -22)
    assert gamma3_cov.l[:2] == (-3, 9)


def test_order_two_keeps_free_data():
    cov = solve_covering_coefficients(4, "1/2", 3, 2)
    assert cov.c == (Fraction(1, 2), 3)
    assert cov.order == 2
    assert cov.max_truncation == 1


def test_explicit_scale():
    assert solve_covering_coefficients(2, 16, -128, 4, scale_k=1).scale_k == 1


@pytest.mark.parametrize("level", [2, 3, 4, 5])
def test_solution_satisfies_eisenstein_relation(level):
    cov = solve_covering_coefficients(level, Fraction(2, 3), -5, 10)
    residuals = eisenstein_residuals(cov)
    assert len(residuals) == 10
    assert not any(residuals)


def test_residuals_detect_wrong_level(lambda_cov):
    assert any(eisenstein_residuals(lambda_cov, level_N=3))


@pytest.mark.parametrize("level", [1, 6, "2", True])
def test_unsupported_level(level):
    with pytest.raises(UnsupportedLevel):
        solve_covering_coefficients(level, 1, 0, 6)


def test_vanishing_c1():
    with pytest.raises(NonInvertibleLeadingCoefficient):
        solve_covering_coefficients(2, 0, 1, 6)


def test_order_below_two():
    with pytest.raises(SeriesPreconditionViolated):
        solve_covering_coefficients(2, 16, -128, 1)
