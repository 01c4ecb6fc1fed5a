import pytest

from puncture_metric.metric import annulus_points, metric_expansion_eval, metric_grid
from puncture_metric.utils import InvalidEvaluationPoint, TruncationExceedsData


def test_annulus_points():
    points = annulus_points("1e-4", "1e-2", 3, 4)
    assert len(points) == 12
    assert [(i, j) for i, j, _ in points[:5]] == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]
    radii = [abs(complex(float(p.re), float(p.im))) for i, j, p in points if j == 0]
    assert radii == pytest.approx([1e-4, 1e-3, 1e-2], rel=1e-12)


def test_single_radius():
    points = annulus_points("1e-3", "1e-3", 1, 2)
    assert [(i, j) for i, j, _ in points] == [(0, 0), (0, 1)]


@pytest.mark.parametrize(
    "args", [("1e-4", "1e-2", 0, 4), ("1e-4", "1e-2", 3, 0), ("0", "1e-2", 3, 4), ("1e-2", "1e-4", 3, 4)]
)
def test_annulus_errors(args):
    with pytest.raises(InvalidEvaluationPoint):
        annulus_points(*args)


def test_grid_is_ordered_and_matches_pointwise(lambda_cov):
    samples = metric_grid(lambda_cov, "1e-4", "1e-2", 3, 4, M=2, workers=3)
    assert [(s.radial_index, s.angular_index) for s in samples] == [
        (i, j) for i in range(3) for j in range(4)
    ]
    for sample in samples:
        expected = metric_expansion_eval(sample.metric.p, 1, lambda_cov, 2)
        assert sample.metric.value == expected.value


def test_grid_checks_truncation(gamma3_cov):
    with pytest.raises(TruncationExceedsData):
        metric_grid(gamma3_cov, "1e-4", "1e-2", 2, 2, M=20)
