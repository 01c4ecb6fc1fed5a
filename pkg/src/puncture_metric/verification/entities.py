from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, computed_field

from ..covering import CoveringData
from ..utils import RationalField


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    residual: str = Field(default="0", description="Largest measured deviation, as text.")
    detail: str = ""


class VerificationReport(BaseModel):
    """
    Outcome of one verification run. ``passed`` and ``failed`` are computed, so they are
    part of the JSON the ``verify`` command prints.

    :ivar order: covering order the checks ran at.
    :ivar checks: one result per check, in registration order.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    checks: tuple[CheckResult, ...] = Field(default_factory=tuple)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]


class VerificationContext(BaseModel):
    """Everything a check may look at; built once per run."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int = Field(..., ge=8)
    coverings: dict[str, CoveringData]
    random_series: tuple[tuple[RationalField, ...], ...] = Field(default_factory=tuple)
    dps: int = 50
    expansion_tolerance: float = 1.0e-3
    picard_tolerance: float = 1.0e-6
    divergence_ratio: float = 1.0e-3

    def random_coefficients(self) -> list[list[Fraction]]:
        return [list(series) for series in self.random_series]
