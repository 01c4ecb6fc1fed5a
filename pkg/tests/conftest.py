from fractions import Fraction
from random import Random

import pytest

from puncture_metric.config import CONFIG_PATH_ENV, CONFIG_SCHEMA_PATH_ENV, PRECISION_ENV, MetricConfig
from puncture_metric.covering import gamma3_covering, lambda_covering
from puncture_metric.verification import random_rational_series


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    for var in (CONFIG_PATH_ENV, CONFIG_SCHEMA_PATH_ENV, PRECISION_ENV):
        monkeypatch.delenv(var, raising=False)
    MetricConfig.reset_instance()
    yield
    MetricConfig.reset_instance()


@pytest.fixture
def lambda_cov():
    return lambda_covering(12)


@pytest.fixture
def gamma3_cov():
    return gamma3_covering(12)


@pytest.fixture
def random_series() -> list[list[Fraction]]:
    rng = Random(20240613)
    return [random_rational_series(rng, 15) for _ in range(20)]
