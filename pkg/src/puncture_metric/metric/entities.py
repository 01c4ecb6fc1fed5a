import re

from typing import Any, Literal

import mpmath

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from .precision import DEFAULT_EXTENDED_DPS, Precision, make_context
from ..utils import InvalidEvaluationPoint

_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_IMAGINARY_ONLY = re.compile(rf"^(?P<im>{_NUMBER})[jJ]$")
_COMPLEX = re.compile(rf"^(?P<re>{_NUMBER})(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)[jJ])?$")


def _format_number(value: Any, digits: int) -> str:
    return mpmath.nstr(value, digits, min_fixed=-4, max_fixed=8)


class ComplexPoint(BaseModel):
    """
    An evaluation point ``p`` near the puncture at 0.

    The coordinates are kept as decimal strings and converted into an mpmath context only
    when a value is needed, so the same point can be evaluated at any precision.
    """

    model_config = ConfigDict(frozen=True)

    re: str = Field(..., description="Real part as a decimal literal.")
    im: str = Field(default="0", description="Imaginary part as a decimal literal.")
    precision: Precision = Field(default=Precision.DOUBLE)
    dps: int = Field(default=DEFAULT_EXTENDED_DPS, ge=15, description="Digits for extended precision.")

    @field_validator("re", "im", mode="before")
    @classmethod
    def _coerce_literal(cls, value: Any) -> str:
        if isinstance(value, bool):
            raise InvalidEvaluationPoint(f"{value!r} is not a number")
        if isinstance(value, (int, float)):
            return repr(value)
        if isinstance(value, str) and re.fullmatch(_NUMBER, value.strip()):
            return value.strip()
        raise InvalidEvaluationPoint(f"{value!r} is not a decimal literal")

    @model_validator(mode="after")
    def _check_nonzero(self) -> "ComplexPoint":
        if mpmath.mpf(self.re) == 0 and mpmath.mpf(self.im) == 0:
            raise InvalidEvaluationPoint("p must be nonzero")
        return self

    def context(self) -> mpmath.MPContext:
        return make_context(self.precision, self.dps)

    def value(self, ctx: mpmath.MPContext) -> Any:
        """
        Convert the stored literals inside ``ctx``. Decimal strings go straight to
        ``ctx.mpf``, so an extended context sees every digit of the literal.

        :param ctx: the context of the evaluation in progress.
        :return: an ``mpc`` owned by ``ctx``.
        """
        return ctx.mpc(ctx.mpf(self.re), ctx.mpf(self.im))

    def conjugate(self) -> "ComplexPoint":
        im = self.im[1:] if self.im.startswith("-") else "-" + self.im.lstrip("+")
        return self.model_copy(update={"im": im})

    @classmethod
    def from_string(
        cls, text: str, precision: Precision | str = Precision.DOUBLE, dps: int = DEFAULT_EXTENDED_DPS
    ) -> "ComplexPoint":
        """Parse ``"1e-3"``, ``"2e-4j"`` or ``"1e-3+2e-4j"`` without going through floats."""
        literal = text.strip().replace(" ", "").strip("()")
        if match := _IMAGINARY_ONLY.match(literal):
            return cls(re="0", im=match["im"], precision=precision, dps=dps)
        if match := _COMPLEX.match(literal):
            return cls(re=match["re"], im=match["im"] or "0", precision=precision, dps=dps)
        raise InvalidEvaluationPoint(f"cannot parse {text!r} as a complex number")

    @classmethod
    def polar(
        cls,
        r: float | str,
        theta: float | str,
        precision: Precision | str = Precision.DOUBLE,
        dps: int = DEFAULT_EXTENDED_DPS,
    ) -> "ComplexPoint":
        """
        Point ``r e^{i theta}`` with the cartesian parts rounded to a few digits beyond
        the working precision of ``precision``.

        :param r: modulus, strictly positive.
        :param theta: argument in radians.
        :raises InvalidEvaluationPoint: if ``r <= 0``.
        :rtype: ComplexPoint
        """
        ctx = make_context(precision, dps)
        radius, angle = ctx.mpf(r), ctx.mpf(theta)
        if radius <= 0:
            raise InvalidEvaluationPoint(f"radius must be positive, got {r}")
        digits = ctx.dps + 5
        return cls(
            re=_format_number(radius * ctx.cos(angle), digits),
            im=_format_number(radius * ctx.sin(angle), digits),
            precision=precision,
            dps=dps,
        )

    def __str__(self) -> str:
        sign = "" if self.im.startswith("-") else "+"
        return f"{self.re}{sign}{self.im.lstrip('+')}j"


class MetricValue(BaseModel):
    """``chi_M(p; v)`` together with the contributions it was assembled from."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Any = Field(..., description="Nonnegative mpmath real.")
    truncation_order: int = Field(..., ge=0)
    term_breakdown: tuple[Any, ...] = Field(default_factory=tuple)
    p: ComplexPoint
    v_norm: str = Field(default="1")
    method: Literal["expansion", "direct"] = Field(default="expansion")

    @model_validator(mode="after")
    def _check_value(self) -> "MetricValue":
        if self.value < 0:
            raise InvalidEvaluationPoint(f"metric value {self.value} is negative")
        if len(self.term_breakdown) != self.truncation_order:
            raise InvalidEvaluationPoint(
                f"expected {self.truncation_order} terms, got {len(self.term_breakdown)}"
            )
        return self

    @property
    def digits(self) -> int:
        return 17 if self.p.precision is Precision.DOUBLE else self.p.dps

    def as_float(self) -> float:
        return float(self.value)

    @field_serializer("value")
    def _serialize_value(self, value: Any) -> str:
        return _format_number(value, self.digits)

    @field_serializer("term_breakdown")
    def _serialize_terms(self, terms: tuple[Any, ...]) -> list[list[str]]:
        return [
            [_format_number(mpmath.re(t), self.digits), _format_number(mpmath.im(t), self.digits)]
            for t in terms
        ]
