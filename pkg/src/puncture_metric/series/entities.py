from fractions import Fraction
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils import InvalidBellIndex, RationalField, SeriesPreconditionViolated


class BellIndex(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Total weight n of B_{n,k}.")
    k: int = Field(..., description="Number of blocks k of B_{n,k}, 1 <= k <= n.")

    @model_validator(mode="after")
    def _check_range(self) -> "BellIndex":
        if self.k < 1 or self.k > self.n:
            raise InvalidBellIndex(self.n, self.k, "expected 1 <= k <= n")
        return self


class TruncatedSeries(BaseModel):
    """
    A power series over Q known up to (but excluding) degree ``order``.

    ``coeffs[i]`` is the coefficient of ``x^(low_degree + i)``; coefficients below
    ``low_degree`` are zero and coefficients of degree ``>= order`` are unknown.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coeffs: tuple[RationalField, ...] = Field(default_factory=tuple)
    low_degree: int = Field(default=0, ge=0)
    order: int = Field(..., ge=0, description="Exclusive truncation bound.")

    @model_validator(mode="after")
    def _check_length(self) -> "TruncatedSeries":
        if self.order < self.low_degree:
            raise SeriesPreconditionViolated(
                "TruncatedSeries", f"order {self.order} is below low_degree {self.low_degree}"
            )
        if len(self.coeffs) != self.order - self.low_degree:
            raise SeriesPreconditionViolated(
                "TruncatedSeries",
                f"expected {self.order - self.low_degree} coefficients, got {len(self.coeffs)}",
            )
        return self

    @classmethod
    def from_dense(
        cls, coeffs: Sequence[Fraction | int | str], order: int | None = None
    ) -> "TruncatedSeries":
        """
        Build a series from coefficients starting at degree 0.

        :param coeffs: exact literals, ``Fraction``, ``int`` or ``"num/den"`` strings.
        :param order: exclusive truncation order; longer input is cut, shorter input is
            padded with zeros. Defaults to ``len(coeffs)``.
        :raises InvalidRationalLiteral: for floats or malformed strings.
        :rtype: TruncatedSeries
        """
        values = list(coeffs)
        if order is None:
            order = len(values)
        values = values[:order] + [Fraction(0)] * max(0, order - len(values))
        return cls(coeffs=tuple(values), order=order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Fraction | int = 1) -> "TruncatedSeries":
        dense = [Fraction(0)] * order
        if degree < order:
            dense[degree] = Fraction(coefficient)
        return cls.from_dense(dense, order)

    def coefficient(self, degree: int) -> Fraction:
        if degree >= self.order:
            raise SeriesPreconditionViolated(
                "coefficient", f"degree {degree} is beyond the truncation order {self.order}"
            )
        if degree < self.low_degree:
            return Fraction(0)
        return self.coeffs[degree - self.low_degree]

    def dense(self) -> list[Fraction]:
        return [Fraction(0)] * self.low_degree + list(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesPreconditionViolated(
                "truncate", f"cannot extend order {self.order} to {order}"
            )
        return TruncatedSeries.from_dense(self.dense()[:order], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .operations import series_add

        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .operations import series_sub

        return series_sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        from .operations import series_mul

        return series_mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        from .operations import series_scale

        return series_scale(self, -1)

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        from .operations import series_compose

        return series_compose(self, inner)

    def __str__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.dense()) if c != 0]
        return f"{' + '.join(terms) or '0'} + O(x^{self.order})"


class SeriesCheck(BaseModel):
    """Outcome of comparing two series coefficient by coefficient."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int
    mismatches: tuple[int, ...] = Field(default_factory=tuple)

    @field_validator("mismatches", mode="before")
    @classmethod
    def _as_tuple(cls, value):
        return tuple(value)

    @property
    def equal(self) -> bool:
        return not self.mismatches
