from .commands import (
    cli,
    cmd_coeffs,
    cmd_example,
    cmd_metric,
    cmd_radius,
    cmd_verify,
    main,
    resolve_covering,
    resolve_point,
)
from .entities import CliConfig, CommandOutput, OutputFormat, Subcommand

__all__ = [
    "cli",
    "cmd_coeffs",
    "cmd_example",
    "cmd_metric",
    "cmd_radius",
    "cmd_verify",
    "main",
    "resolve_covering",
    "resolve_point",
    "CliConfig",
    "CommandOutput",
    "OutputFormat",
    "Subcommand",
]
