import json

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, computed_field, model_validator

from ..series import TruncatedSeries
from ..utils import (
    InconsistentCoveringData,
    NonInvertibleLeadingCoefficient,
    RationalField,
    UnsupportedLevel,
)

SUPPORTED_LEVELS = (2, 3, 4, 5)
USER_SUPPLIED = "user-supplied"


class CoveringData(BaseModel):
    """
    Exact series data of a covering map ``f: H -> CP^1 minus {0, a_2, ..., a_n}`` with
    ``f(infinity) = 0``, expanded in ``q_k = exp(2 pi i tau / k)``.

    ``c`` holds ``c_1 .. c_order`` of ``f(q_k)``, ``b`` holds ``b_1 .. b_order`` of the
    inverse series ``q_k(f)`` and ``l`` holds ``l_1 .. l_{order-1}`` of
    ``log(q_k / (b_1 f))``; metric expansions can therefore be truncated at
    ``order - 1`` terms at most.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    level_N: int | Literal["user-supplied"] = Field(default=USER_SUPPLIED)
    scale_k: RationalField = Field(default=Fraction(1))
    c: tuple[RationalField, ...]
    b: tuple[RationalField, ...]
    l: tuple[RationalField, ...]
    order: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_invariants(self) -> "CoveringData":
        if isinstance(self.level_N, int) and self.level_N not in SUPPORTED_LEVELS:
            raise UnsupportedLevel(self.level_N)
        if self.scale_k <= 0:
            raise InconsistentCoveringData(f"scale_k must be positive, got {self.scale_k}")
        if len(self.c) != self.order or len(self.b) != self.order:
            raise InconsistentCoveringData(
                f"expected {self.order} c and b coefficients, got {len(self.c)} and {len(self.b)}"
            )
        if len(self.l) != self.order - 1:
            raise InconsistentCoveringData(
                f"expected {self.order - 1} l coefficients, got {len(self.l)}"
            )
        if self.c[0] == 0:
            raise NonInvertibleLeadingCoefficient("c1")
        if self.b[0] != 1 / self.c[0]:
            raise InconsistentCoveringData(f"b1 = {self.b[0]} is not 1/c1 = {1 / self.c[0]}")
        return self

    @computed_field
    @property
    def max_truncation(self) -> int:
        """
        Largest ``M`` the metric expansion accepts for this data: ``l`` stops at
        ``l_{order-1}``.

        :return: ``order - 1``.
        :rtype: int
        """
        return self.order - 1

    def c_series(self) -> TruncatedSeries:
        """``f(q) = c_1 q + ... + c_order q^order`` truncated at ``order + 1``."""
        return TruncatedSeries.from_dense([Fraction(0), *self.c], self.order + 1)

    def b_series(self) -> TruncatedSeries:
        return TruncatedSeries.from_dense([Fraction(0), *self.b], self.order + 1)

    def composition_residual(self) -> list[Fraction]:
        """Coefficients of ``f(q(x)) - x``; all zero for consistent data."""
        from ..series import series_compose

        composed = series_compose(self.c_series(), self.b_series()).dense()
        return [value - (1 if degree == 1 else 0) for degree, value in enumerate(composed)]

    def to_json(self) -> str:
        """
        Serialise to the coefficients-file format read by ``--coeffs-file``. Every
        rational becomes a ``"num/den"`` string and the computed ``max_truncation`` is left
        out.

        :return: indented JSON text.
        :rtype: str
        """
        payload = self.model_dump(mode="json", exclude={"max_truncation"})
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CoveringData":
        """
        Load covering data written by :meth:`to_json`, re-checking every invariant,
        including the composition identity ``f(q(x)) = x``.

        :raises InconsistentCoveringData: on malformed JSON or violated invariants.
        """
        try:
            payload = json.loads(text)
            payload.pop("max_truncation", None)
            data = cls.model_validate(payload)
        except (ValidationError, json.JSONDecodeError, AttributeError, TypeError) as e:
            raise InconsistentCoveringData(str(e))
        if any(r != 0 for r in data.composition_residual()):
            raise InconsistentCoveringData("b is not the compositional inverse of c")
        return data


class EtaFactor(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scale: RationalField = Field(..., description="s in eta(s * tau), positive.")
    exponent: int

    @model_validator(mode="after")
    def _check_scale(self) -> "EtaFactor":
        if self.scale <= 0:
            raise InconsistentCoveringData(f"eta scale must be positive, got {self.scale}")
        return self


class EtaQuotientSpec(BaseModel):
    """``multiplier * prod_i eta(s_i tau)^(e_i)``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    factors: tuple[EtaFactor, ...] = Field(default_factory=tuple)
    multiplier: RationalField = Field(default=Fraction(1))

    @computed_field
    @property
    def leading_q_power(self) -> RationalField:
        return sum((f.exponent * f.scale / 24 for f in self.factors), Fraction(0))

    @classmethod
    def of(cls, *factors: tuple[Fraction | int | str, int], multiplier=1) -> "EtaQuotientSpec":
        """
        Build a quotient from ``(scale, exponent)`` pairs, e.g. ``of((3, 3), ("1/3", -3))``
        for ``(eta(3 tau) / eta(tau/3))^3``.

        :param factors: ``(scale, exponent)`` pairs; scales are exact rationals.
        :param multiplier: constant in front of the product.
        :rtype: EtaQuotientSpec
        """
        return cls(
            factors=tuple(EtaFactor(scale=s, exponent=e) for s, e in factors),
            multiplier=multiplier,
        )
