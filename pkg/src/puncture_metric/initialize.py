import functools
import logging
import logging.config
import os

from importlib import resources

import dotenv
import yaml

logger = logging.getLogger(__name__)

DEFAULT_LOG_CONFIG_PATH = str(resources.files("puncture_metric").joinpath("resources", "logging.yaml"))

OPTIONAL_ENV_VARS = [
    "PUNCTURE_METRIC_CONFIG_PATH",
    "PUNCTURE_METRIC_CONFIG_SCHEMA_PATH",
    "PUNCTURE_METRIC_PRECISION",
    "LOG_CONFIG_PATH",
    "LOG_LEVEL",
    "LOG_LEVELS",
]


@functools.lru_cache(maxsize=1)
def initialize() -> None:
    """
    Load ``.env``, configure logging and report the environment. Runs once per process
    however often it is called.
    """
    dotenv.load_dotenv()

    log_config_path = os.getenv("LOG_CONFIG_PATH", DEFAULT_LOG_CONFIG_PATH)
    setup_logging(log_config_path)

    validate_env_variables()


def parse_module_levels(raw: str | None) -> dict[str, str]:
    """
    Parse ``LOG_LEVELS`` such as ``"puncture_metric.metric.grid=DEBUG,puncture_metric.covering=INFO"``.

    Malformed entries and unknown level names are skipped with a warning so a typo never
    stops a command.

    :param raw: comma separated ``logger=LEVEL`` pairs, or ``None``.
    :return: logger name to upper-case level name.
    """
    levels: dict[str, str] = {}
    for entry in (raw or "").split(","):
        entry = entry.strip()
        if not entry:
            continue
        name, sep, level = entry.partition("=")
        level = level.strip().upper()
        if not sep or not name.strip() or level not in logging.getLevelNamesMapping():
            logger.warning(f"Ignoring malformed LOG_LEVELS entry: {entry!r}")
            continue
        levels[name.strip()] = level
    return levels


def apply_level_overrides(config: dict, root_level: str, module_levels: dict[str, str]) -> dict:
    """
    Set the root level and merge per-module levels into a dictConfig mapping. Module
    loggers keep propagating to the root handlers unless the file says otherwise.
    """
    config.setdefault("root", {})["level"] = root_level
    loggers = config.get("loggers") or {}
    for name, level in module_levels.items():
        loggers.setdefault(name, {})["level"] = level
    if loggers:
        config["loggers"] = loggers
    return config


def setup_logging(config_path: str) -> None:
    """
    Load logging configuration from a YAML file, then apply ``LOG_LEVEL`` to the root and
    ``LOG_LEVELS`` to individual modules (the grid workers, the coefficient solvers).

    Falls back to the packaged config if the file fails, then to ``basicConfig``.

    :param config_path: path of a ``logging.config.dictConfig`` YAML document.
    """
    log_level = os.getenv("LOG_LEVEL", "WARNING").upper()
    module_levels = parse_module_levels(os.getenv("LOG_LEVELS"))

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)

        logging.config.dictConfig(apply_level_overrides(config, log_level, module_levels))
        logger.info(f"Logging configured from {config_path} with module levels {module_levels}")
    except (
        FileNotFoundError,
        yaml.YAMLError,
        KeyError,
        OSError,
        ValueError,
        TypeError,
        AttributeError,
    ) as e:
        if config_path != DEFAULT_LOG_CONFIG_PATH:
            logger.warning(f"Failed to load logging config from {config_path}: {e!r}. Using the packaged one")
            setup_logging(DEFAULT_LOG_CONFIG_PATH)
        else:
            logging.basicConfig(level=log_level)
            for name, level in module_levels.items():
                logging.getLogger(name).setLevel(level)
            logger.warning(f"Packaged logging config failed: {e!r}. Using basicConfig at {log_level}")


def validate_env_variables() -> list[str]:
    """
    Log which optional environment variables are set. None are required: every setting
    has a packaged default.

    :return: the names of the variables that are set.
    """
    present = [var for var in OPTIONAL_ENV_VARS if os.getenv(var) is not None]
    missing = [var for var in OPTIONAL_ENV_VARS if os.getenv(var) is None]
    if present:
        logger.info(f"Environment overrides in effect: {present}")
    if missing:
        logger.debug(f"Optional environment variables not set: {missing}")
    return present
