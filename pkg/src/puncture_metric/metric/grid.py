import logging

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import mpmath

from pydantic import BaseModel, ConfigDict, Field

from .entities import ComplexPoint, MetricValue
from .expansion import DEFAULT_VALIDITY_RADIUS, check_truncation, metric_expansion_eval
from .precision import DEFAULT_EXTENDED_DPS, Precision
from ..covering import CoveringData
from ..utils import InvalidEvaluationPoint

logger = logging.getLogger(__name__)

GRID_THREAD_PREFIX = "metric-grid"


class GridSample(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    radial_index: int = Field(..., ge=0)
    angular_index: int = Field(..., ge=0)
    metric: MetricValue


def annulus_points(
    r_min: float | str,
    r_max: float | str,
    radial: int,
    angular: int,
    precision: Precision | str = Precision.DOUBLE,
    dps: int = DEFAULT_EXTENDED_DPS,
) -> list[tuple[int, int, ComplexPoint]]:
    """Log-spaced radii from ``r_min`` to ``r_max`` times ``angular`` equally spaced angles."""
    if radial < 1 or angular < 1:
        raise InvalidEvaluationPoint("grid needs at least one radius and one angle")
    low, high = mpmath.mpf(r_min), mpmath.mpf(r_max)
    if low <= 0 or high < low:
        raise InvalidEvaluationPoint(f"expected 0 < r_min <= r_max, got {r_min} and {r_max}")

    points = []
    for i in range(radial):
        fraction = mpmath.mpf(i) / (radial - 1) if radial > 1 else mpmath.mpf(0)
        radius = low * (high / low) ** fraction
        for j in range(angular):
            theta = 2 * mpmath.pi * j / angular
            points.append((i, j, ComplexPoint.polar(str(radius), str(theta), precision, dps)))
    return points


def metric_grid(
    cov: CoveringData,
    r_min: float | str,
    r_max: float | str,
    radial: int,
    angular: int,
    M: int,
    v_norm: float | str = 1,
    precision: Precision | str = Precision.DOUBLE,
    dps: int = DEFAULT_EXTENDED_DPS,
    workers: int = 4,
    validity_radius: Fraction | None = DEFAULT_VALIDITY_RADIUS,
) -> list[GridSample]:
    """
    Evaluate ``metric_expansion_eval`` on an annulus lattice using a thread pool.

    Every evaluation builds its own mpmath context. Results come back ordered by
    ``(radial_index, angular_index)`` whatever order the workers finish in.
    """
    check_truncation(M, cov)
    points = annulus_points(r_min, r_max, radial, angular, precision, dps)
    logger.info(f"Evaluating metric grid of {len(points)} points with {workers} workers")

    def evaluate(item: tuple[int, int, ComplexPoint]) -> GridSample:
        i, j, point = item
        value = metric_expansion_eval(point, v_norm, cov, M, validity_radius)
        logger.debug(f"Grid point ({i}, {j}) at p=({point.re}, {point.im}) evaluated")
        return GridSample(radial_index=i, angular_index=j, metric=value)

    with ThreadPoolExecutor(max_workers=max(1, workers), thread_name_prefix=GRID_THREAD_PREFIX) as pool:
        samples = list(pool.map(evaluate, points))
    return sorted(samples, key=lambda s: (s.radial_index, s.angular_index))
