from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

from .exceptions import InvalidRationalLiteral

Rational = Fraction


def parse_rational(value: Any) -> Fraction:
    """
    Convert an exact literal into a ``Fraction``.

    Accepts ``Fraction``, ``int`` and strings such as ``"-128"``, ``"1/16"`` or
    ``"0.25"``. Floats are refused because they are not exact.

    :raises InvalidRationalLiteral: for floats, booleans, malformed strings and zero
        denominators.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidRationalLiteral(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidRationalLiteral(value)
    raise InvalidRationalLiteral(value)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


RationalField = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]
