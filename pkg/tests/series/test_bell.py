from fractions import Fraction

import pytest
import sympy

from puncture_metric.series import (
    BellIndex,
    bell_polynomial,
    factorial,
    log_bell_coefficients,
    partial_bell,
)
from puncture_metric.utils import InvalidBellIndex


@pytest.mark.parametrize("n", range(1, 9))
def test_partial_bell_matches_sympy(n):
    for k in range(1, n + 1):
        symbols = sympy.symbols(f"x1:{n - k + 2}")
        ours = partial_bell(n, k, symbols)
        assert sympy.expand(ours - sympy.bell(n, k, symbols)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_partial_bell_with_rational_arguments(n):
    values = [Fraction(j, j + 2) * (-1) ** j for j in range(1, n + 1)]
    for k in range(1, n + 1):
        symbols = sympy.symbols(f"x1:{n - k + 2}")
        expected = sympy.bell(n, k, symbols).subs(
            {s: sympy.Rational(v.numerator, v.denominator) for s, v in zip(symbols, values)}
        )
        assert partial_bell(n, k, values) == Fraction(int(expected.p), int(expected.q))


def test_partial_bell_small_cases():
    x1, x2, x3 = sympy.symbols("x1 x2 x3")
    assert sympy.expand(partial_bell(4, 2, [x1, x2, x3]) - (4 * x1 * x3 + 3 * x2**2)) == 0
    assert partial_bell(5, 1, [1, 2, 3, 4, 7]) == 7
    assert partial_bell(6, 6, [Fraction(1, 2)]) == Fraction(1, 64)


def test_partial_bell_skips_zero_arguments():
    # B_{4,2}(0, t2, t3) = 3 t2^2
    assert partial_bell(4, 2, [0, 5, 11]) == 75


@pytest.mark.parametrize("n, k, t", [(3, 0, [1, 2, 3]), (2, 3, [1]), (4, 2, [1, 2])])
def test_partial_bell_rejects_bad_index(n, k, t):
    with pytest.raises(InvalidBellIndex):
        partial_bell(n, k, t)


def test_bell_polynomial_accepts_index_model():
    t = [Fraction(1), Fraction(2), Fraction(3), Fraction(4)]
    assert bell_polynomial(BellIndex(n=5, k=2), t) == partial_bell(5, 2, t)
    assert bell_polynomial((5, 2), t) == partial_bell(5, 2, t)


def test_bell_index_validation():
    with pytest.raises(InvalidBellIndex):
        BellIndex(n=2, k=3)


def test_log_bell_coefficients_of_exponential():
    # log(exp(x)) = x, exp(x) - 1 has every exponential coefficient equal to 1
    assert log_bell_coefficients([Fraction(1)] * 5, 5) == [1, 0, 0, 0, 0]


def test_log_bell_coefficients_with_scale():
    # log(1 + x) = x - x^2/2 + x^3/3: exponential coefficients 1, -1, 2
    a = [Fraction(3), Fraction(0), Fraction(0)]
    assert log_bell_coefficients(a, 3, scale=Fraction(3)) == [1, -1, 2]


def test_factorial():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
