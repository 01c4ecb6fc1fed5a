from typing import Any

import mpmath

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from ..metric import ComplexPoint, Precision
from ..utils import InvalidEvaluationPoint, RationalField


class ExpCoefficients(BaseModel):
    """``c~_1 .. c~_n`` of ``1 / (1 + sum m l_m f^m / m!) = 1 + sum c~_m f^m / m!``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c_tilde: tuple[RationalField, ...] = Field(default_factory=tuple)

    @property
    def order(self) -> int:
        return len(self.c_tilde)

    def with_unit(self) -> list:
        """``c~_0 = 1`` followed by the stored coefficients."""
        return [1, *self.c_tilde]


class RadiusBound(BaseModel):
    """
    Upper bound on the radius of a disc that maps holomorphically into the punctured
    sphere with derivative 1 at its centre, obtained from ``1 / chi_M(p; 1)``.

    ``direct_reciprocal`` and ``relative_gap`` compare against the direct series and stay
    ``None`` when that series cannot be trusted at ``p``. Reals serialise as strings
    carrying ``digits`` significant digits.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bound: Any = Field(..., description="Upper bound on the maximal radius, an mpmath real.")
    p: ComplexPoint
    truncation_order: int = Field(..., ge=0)
    leading_term: Any = Field(..., description="|p| |log|b_1 p||")
    direct_reciprocal: Any | None = Field(default=None, description="1 / chi(p; 1) from the direct series.")
    relative_gap: Any | None = None

    @model_validator(mode="after")
    def _check_bound(self) -> "RadiusBound":
        if not self.bound > 0:
            raise InvalidEvaluationPoint(f"radius bound {self.bound} is not positive")
        return self

    @property
    def digits(self) -> int:
        return 17 if self.p.precision is Precision.DOUBLE else self.p.dps

    def as_float(self) -> float:
        return float(self.bound)

    @field_serializer("bound", "leading_term", "direct_reciprocal", "relative_gap")
    def _serialize_real(self, value: Any) -> str | None:
        if value is None:
            return None
        return mpmath.nstr(value, self.digits, min_fixed=-4, max_fixed=8)
