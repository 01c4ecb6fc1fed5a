from .direct import DEFAULT_DIVERGENCE_RATIO, metric_direct_eval
from .entities import ComplexPoint, MetricValue
from .expansion import (
    DEFAULT_VALIDITY_RADIUS,
    c_m_term,
    check_truncation,
    log_modulus,
    metric_expansion_eval,
    r_m_term,
)
from .grid import GridSample, annulus_points, metric_grid
from .precision import DEFAULT_EXTENDED_DPS, Precision, make_context

__all__ = [
    "DEFAULT_DIVERGENCE_RATIO",
    "metric_direct_eval",
    "ComplexPoint",
    "MetricValue",
    "DEFAULT_VALIDITY_RADIUS",
    "c_m_term",
    "check_truncation",
    "log_modulus",
    "metric_expansion_eval",
    "r_m_term",
    "GridSample",
    "annulus_points",
    "metric_grid",
    "DEFAULT_EXTENDED_DPS",
    "Precision",
    "make_context",
]
