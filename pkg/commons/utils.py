import json
import re
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from commons.constants import MSG_BAD_RATIONAL
from commons.errors import ParseError

RationalLike = Union[int, str, Fraction]

RATIONAL_TEXT = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_rational(value: RationalLike, field: str = "value") -> Fraction:
    """Read an int, Fraction or "p/q" string as an exact rational"""
    if isinstance(value, bool):
        raise ParseError(field, MSG_BAD_RATIONAL.format(text=value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not RATIONAL_TEXT.match(text):
            raise ParseError(field, MSG_BAD_RATIONAL.format(text=value))
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(field, MSG_BAD_RATIONAL.format(text=value))
    raise ParseError(field, MSG_BAD_RATIONAL.format(text=value))


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def format_vector(vector: Sequence[Fraction]) -> list:
    return [format_rational(v) for v in vector]


def dumps(payload: Any, indent: Optional[int] = None) -> str:
    """Canonical JSON: sorted keys, compact separators unless indented"""
    if indent is None:
        return json.dumps(payload, sort_keys=True, separators=(',', ':'))
    return json.dumps(payload, sort_keys=True, indent=indent)
