import logging

import pytest

from puncture_metric.initialize import (
    DEFAULT_LOG_CONFIG_PATH,
    apply_level_overrides,
    initialize,
    parse_module_levels,
    setup_logging,
    validate_env_variables,
)

GRID_LOGGER = "puncture_metric.metric.grid"


@pytest.fixture
def restore_logging(monkeypatch):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.delenv("LOG_LEVELS", raising=False)
    yield
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.delenv("LOG_LEVELS", raising=False)
    for name in (GRID_LOGGER, "puncture_metric.covering"):
        logging.getLogger(name).setLevel(logging.NOTSET)
    setup_logging(DEFAULT_LOG_CONFIG_PATH)


def test_packaged_logging_config(restore_logging):
    setup_logging(DEFAULT_LOG_CONFIG_PATH)
    root = logging.getLogger()
    assert root.level == logging.WARNING
    assert any(isinstance(h, logging.StreamHandler) for h in root.handlers)


def test_log_level_override(restore_logging, monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "debug")
    setup_logging(DEFAULT_LOG_CONFIG_PATH)
    assert logging.getLogger().level == logging.DEBUG


def test_broken_config_falls_back_to_packaged(restore_logging, tmp_path):
    broken = tmp_path / "logging.yaml"
    broken.write_text("version: 1\nhandlers: [not, a, mapping]\n")
    setup_logging(str(broken))
    assert logging.getLogger().level == logging.WARNING


def test_missing_config_falls_back_to_packaged(restore_logging, tmp_path):
    setup_logging(str(tmp_path / "missing.yaml"))
    assert logging.getLogger().level == logging.WARNING


def test_validate_env_variables(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "INFO")
    monkeypatch.delenv("LOG_CONFIG_PATH", raising=False)
    present = validate_env_variables()
    assert "LOG_LEVEL" in present
    assert "LOG_CONFIG_PATH" not in present


def test_initialize_runs_once(mocker):
    initialize()
    setup = mocker.patch("puncture_metric.initialize.setup_logging")
    initialize()
    setup.assert_not_called()


def test_parse_module_levels_skips_malformed_entries():
    levels = parse_module_levels(f" {GRID_LOGGER}=debug, nonsense, puncture_metric.covering=LOUD,=INFO")
    assert levels == {GRID_LOGGER: "DEBUG"}
    assert parse_module_levels(None) == {}


def test_apply_level_overrides_merges_with_file_loggers():
    config = {"version": 1, "loggers": {"puncture_metric.covering": {"level": "INFO", "propagate": False}}}
    merged = apply_level_overrides(config, "ERROR", {"puncture_metric.covering": "DEBUG", GRID_LOGGER: "INFO"})
    assert merged["root"]["level"] == "ERROR"
    assert merged["loggers"]["puncture_metric.covering"] == {"level": "DEBUG", "propagate": False}
    assert merged["loggers"][GRID_LOGGER] == {"level": "INFO"}


def test_module_level_override_for_grid_workers(restore_logging, monkeypatch):
    monkeypatch.setenv("LOG_LEVELS", f"{GRID_LOGGER}=DEBUG")
    setup_logging(DEFAULT_LOG_CONFIG_PATH)
    assert logging.getLogger().level == logging.WARNING
    assert logging.getLogger(GRID_LOGGER).getEffectiveLevel() == logging.DEBUG


def test_module_levels_survive_fallback(restore_logging, monkeypatch, tmp_path):
    monkeypatch.setenv("LOG_LEVELS", "puncture_metric.covering=INFO")
    setup_logging(str(tmp_path / "missing.yaml"))
    assert logging.getLogger("puncture_metric.covering").level == logging.INFO
