import logging
import os

from fractions import Fraction
from importlib import resources

import yamale

from ..utils import InvalidConfiguration, InvalidRationalLiteral, parse_rational

logger = logging.getLogger(__name__)

CONFIG_PATH_ENV = "PUNCTURE_METRIC_CONFIG_PATH"
CONFIG_SCHEMA_PATH_ENV = "PUNCTURE_METRIC_CONFIG_SCHEMA_PATH"
PRECISION_ENV = "PUNCTURE_METRIC_PRECISION"


def _packaged_text(name: str) -> str:
    return resources.files("puncture_metric").joinpath("resources", name).read_text(encoding="utf-8")


class MetricConfig:

    _instance = None
    config: list
    precision: str
    extendedDps: int
    validityRadius: str
    divergenceRatio: float
    workers: int
    grid: dict
    verify: dict

    @classmethod
    def get_or_create_instance(cls) -> "MetricConfig":
        """
        Retrieve the process-wide configuration, reading and validating it on first use.
        Later calls return the same object until ``reset_instance`` drops it, so env
        overrides only take effect when the instance is built.

        :raises FileNotFoundError: if ``PUNCTURE_METRIC_CONFIG_PATH`` or
            ``PUNCTURE_METRIC_CONFIG_SCHEMA_PATH`` points at a missing file.
        :raises InvalidConfiguration: if the document does not match the schema or a
            value is out of range.
        :returns: The single instance of the `MetricConfig` class.
        :rtype: MetricConfig
        """
        if cls._instance is None:
            logger.debug("Creating new instance of MetricConfig")
            cls._instance = MetricConfig()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """Forget the cached instance; the next lookup re-reads files and environment."""
        cls._instance = None

    def __init__(self):
        logger.info(
            f"Reading config from env variable '{CONFIG_PATH_ENV}' which is set to: {os.environ.get(CONFIG_PATH_ENV)}"
        )
        schema = yamale.make_schema(
            content=self._read(CONFIG_SCHEMA_PATH_ENV, "config-schema.yaml")
        )
        self.config = yamale.make_data(content=self._read(CONFIG_PATH_ENV, "config.yaml"))
        try:
            yamale.validate(schema, self.config)
        except ValueError as e:
            logger.error(f"Schema validation failed!\n{str(e)}")
            raise InvalidConfiguration(str(e))
        logger.info("Schema validation success")
        self._set_default_config_class_attributes(self.config[0][0].get("service"))
        self._apply_env_overrides()
        self._check_values()

    @staticmethod
    def _read(env_var: str, packaged_name: str) -> str:
        """
        Read the file named by ``env_var``, or the packaged default when it is unset.

        :raises FileNotFoundError: if ``env_var`` is set to a path that does not exist.
        """
        path = os.environ.get(env_var)
        if path is None:
            return _packaged_text(packaged_name)
        if not os.path.isfile(path):
            raise FileNotFoundError(f"{path} is not a file")
        with open(path, "r", encoding="utf-8") as f:
            return f.read()

    def _set_default_config_class_attributes(self, defaults: dict):
        """
        Expose every key of the ``service`` section as an attribute, keeping the camelCase
        names used in the YAML file.

        :param defaults: the validated ``service`` mapping.
        """
        for key, value in defaults.items():
            setattr(self, key, value)

    def _apply_env_overrides(self) -> None:
        precision = os.environ.get(PRECISION_ENV)
        if precision:
            logger.info(f"Precision overridden by {PRECISION_ENV}={precision}")
            self.precision = precision.strip().lower()

    def _check_values(self) -> None:
        """
        Range checks the schema cannot express: the precision name, the validity radius
        as an exact rational in (0, 1) and the grid bounds.

        :raises InvalidConfiguration: naming the offending key.
        """
        if self.precision not in ("double", "extended"):
            raise InvalidConfiguration(f"precision must be double or extended, got {self.precision!r}")
        try:
            radius = parse_rational(self.validityRadius)
        except InvalidRationalLiteral as e:
            raise InvalidConfiguration(e.message)
        if not 0 < radius < 1:
            raise InvalidConfiguration(f"validityRadius must lie in (0, 1), got {radius}")
        if self.grid["rMin"] <= 0 or self.grid["rMax"] < self.grid["rMin"]:
            raise InvalidConfiguration("grid needs 0 < rMin <= rMax")

    @property
    def validity_radius(self) -> Fraction:
        """
        :return: ``validityRadius`` parsed as an exact rational.
        :rtype: Fraction
        """
        return parse_rational(self.validityRadius)

    @property
    def tolerances(self) -> dict:
        return self.verify["tolerances"]
