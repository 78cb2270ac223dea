"""
Exact rational scalars.

`Rational` is `fractions.Fraction`: arbitrary-precision, always stored in lowest
terms with a positive denominator. Square roots are never formed; comparisons
involving an absolute value are made on its square.
"""
import re
from enum import Enum
from fractions import Fraction
from typing import Union

from relmin.errors import DomainError, ExactArithmeticError, MalformedInputError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class Op(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    NEG = "neg"
    CMP = "cmp"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; the sign belongs to the numerator."""
    match = _RATIONAL_TEXT.match(text) if isinstance(text, str) else None
    if match is None:
        raise MalformedInputError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise MalformedInputError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(q: Fraction) -> str:
    # Fraction.__str__ already prints "p" for integers and "p/q" otherwise.
    return str(Fraction(q))


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError(f"booleans are not rationals: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise MalformedInputError(f"cannot read {value!r} as an exact rational")


def canonicalize(numerator: int, denominator: int) -> Fraction:
    if denominator == 0:
        raise ExactArithmeticError("zero denominator")
    return Fraction(numerator, denominator)


def rational_arithmetic(a: RationalLike, b: RationalLike = None, op: Union[Op, str] = Op.ADD):
    """
    Evaluate one exact operation. Returns a Fraction, or -1/0/1 for CMP.
    NEG ignores `b`.
    """
    op = Op(op)
    a = to_rational(a)
    if op is Op.NEG:
        return -a
    if b is None:
        raise MalformedInputError(f"operation {op.value} needs two operands")
    b = to_rational(b)

    if op is Op.ADD:
        return a + b
    if op is Op.SUB:
        return a - b
    if op is Op.MUL:
        return a * b
    if op is Op.DIV:
        if b == 0:
            raise ExactArithmeticError(f"division of {a} by zero")
        return a / b
    return (a > b) - (a < b)


def sqrt_sum_leq(q: RationalLike, s: RationalLike, t: RationalLike) -> bool:
    """
    Decide sqrt(q) <= sqrt(s) + sqrt(t) exactly.

    With L = q - s - t the claim is trivially true for L <= 0; otherwise both
    sides of L <= 2*sqrt(s*t) are non-negative and squaring is safe.
    """
    q, s, t = to_rational(q), to_rational(s), to_rational(t)
    if q < 0 or s < 0 or t < 0:
        raise DomainError(f"sqrt_sum_leq needs non-negative inputs; got {q}, {s}, {t}")
    slack = q - s - t
    if slack <= 0:
        return True
    return slack * slack <= 4 * s * t
