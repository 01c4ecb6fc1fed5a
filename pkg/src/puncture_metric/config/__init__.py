from .app import CONFIG_PATH_ENV, CONFIG_SCHEMA_PATH_ENV, PRECISION_ENV, MetricConfig


__all__ = ["CONFIG_PATH_ENV", "CONFIG_SCHEMA_PATH_ENV", "PRECISION_ENV", "MetricConfig"]
