from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from ..metric import Precision


class Subcommand(str, Enum):
    COEFFS = "coeffs"
    METRIC = "metric"
    RADIUS = "radius"
    VERIFY = "verify"
    EXAMPLE = "example"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    HUMAN = "human"


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    order: int = Field(..., ge=1)
    precision: Precision = Field(default=Precision.DOUBLE)
    output_format: OutputFormat = Field(default=OutputFormat.JSON)


class CommandOutput(BaseModel):
    """What a command produced, ready for any of the output formats."""

    model_config = ConfigDict(frozen=True)

    title: str
    payload: Any
    columns: list[str] = Field(default_factory=list)
    rows: list[list[str]] = Field(default_factory=list)
    ok: bool = True
