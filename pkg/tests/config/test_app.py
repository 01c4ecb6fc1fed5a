from fractions import Fraction
from importlib import resources

import pytest

from puncture_metric.config import CONFIG_PATH_ENV, PRECISION_ENV, MetricConfig
from puncture_metric.utils import InvalidConfiguration


def packaged_config() -> str:
    return resources.files("puncture_metric").joinpath("resources", "config.yaml").read_text()


def write_config(tmp_path, monkeypatch, text):
    path = tmp_path / "config.yaml"
    path.write_text(text)
    monkeypatch.setenv(CONFIG_PATH_ENV, str(path))


def test_packaged_defaults():
    config = MetricConfig.get_or_create_instance()
    assert config.precision == "double"
    assert config.extendedDps == 50
    assert config.validity_radius == Fraction(1, 4)
    assert config.divergenceRatio == pytest.approx(1e-3)
    assert config.grid["radial"] == 16
    assert config.verify["order"] == 12
    assert config.tolerances == {"expansionVsDirect": 1e-3, "picardReciprocal": 1e-6}


def test_singleton():
    assert MetricConfig.get_or_create_instance() is MetricConfig.get_or_create_instance()
    first = MetricConfig.get_or_create_instance()
    MetricConfig.reset_instance()
    assert MetricConfig.get_or_create_instance() is not first


def test_precision_env_override(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, " Extended ")
    assert MetricConfig.get_or_create_instance().precision == "extended"


def test_bad_precision_env(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, "quad")
    with pytest.raises(InvalidConfiguration):
        MetricConfig.get_or_create_instance()


def test_custom_config_file(tmp_path, monkeypatch):
    write_config(tmp_path, monkeypatch, packaged_config().replace("workers: 4", "workers: 2"))
    assert MetricConfig.get_or_create_instance().workers == 2


def test_schema_violation(tmp_path, monkeypatch):
    write_config(tmp_path, monkeypatch, packaged_config().replace("precision: double", "precision: single"))
    with pytest.raises(InvalidConfiguration):
        MetricConfig.get_or_create_instance()


@pytest.mark.parametrize("radius", ['"2"', '"0"', '"one quarter"'])
def test_bad_validity_radius(tmp_path, monkeypatch, radius):
    write_config(tmp_path, monkeypatch, packaged_config().replace('"1/4"', radius))
    with pytest.raises(InvalidConfiguration):
        MetricConfig.get_or_create_instance()


def test_bad_grid(tmp_path, monkeypatch):
    write_config(tmp_path, monkeypatch, packaged_config().replace("rMin: 1.0e-4", "rMin: 1.0e-1"))
    with pytest.raises(InvalidConfiguration):
        MetricConfig.get_or_create_instance()


def test_missing_config_file(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_PATH_ENV, str(tmp_path / "missing.yaml"))
    with pytest.raises(FileNotFoundError):
        MetricConfig.get_or_create_instance()
