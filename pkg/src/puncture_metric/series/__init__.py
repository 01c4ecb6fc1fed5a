from .bell import bell_polynomial, factorial, log_bell_coefficients, partial_bell
from .entities import BellIndex, SeriesCheck, TruncatedSeries
from .operations import (
    compare_series,
    evaluate_derivative,
    evaluate_series,
    series_add,
    series_compose,
    series_derivative,
    series_exp,
    series_log_unit,
    series_mul,
    series_pow,
    series_reciprocal,
    series_scale,
    series_sub,
    series_valuation,
    to_context,
)
from .reversion import invert_series_newton
from .schwarzian import log_derivative_coefficients, schwarzian, schwarzian_direct

__all__ = [
    "BellIndex",
    "SeriesCheck",
    "TruncatedSeries",
    "bell_polynomial",
    "factorial",
    "log_bell_coefficients",
    "partial_bell",
    "compare_series",
    "evaluate_derivative",
    "evaluate_series",
    "series_add",
    "series_compose",
    "series_derivative",
    "series_exp",
    "series_log_unit",
    "series_mul",
    "series_pow",
    "series_reciprocal",
    "series_scale",
    "series_sub",
    "series_valuation",
    "to_context",
    "invert_series_newton",
    "log_derivative_coefficients",
    "schwarzian",
    "schwarzian_direct",
]
