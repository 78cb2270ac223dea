from fractions import Fraction

import math

import pytest
from hypothesis import assume, given, strategies as st

from relmin.algebra.scalars import (
    Op,
    canonicalize,
    format_rational,
    parse_rational,
    rational_arithmetic,
    sqrt_sum_leq,
    to_rational,
)
from relmin.errors import DomainError, ExactArithmeticError, MalformedInputError
from strategies import nonzero_rationals, rationals


def test_add_halves_and_thirds():
    assert rational_arithmetic("1/2", "1/3", Op.ADD) == Fraction(5, 6)


def test_canonicalize_reduces():
    assert canonicalize(2, 4) == Fraction(1, 2)
    assert format_rational(canonicalize(2, 4)) == "1/2"


def test_division_by_zero_is_an_error():
    with pytest.raises(ExactArithmeticError):
        rational_arithmetic(1, 0, "div")
    with pytest.raises(ZeroDivisionError):
        rational_arithmetic(1, 0, "div")


def test_cmp_and_neg():
    assert rational_arithmetic("1/3", "1/2", Op.CMP) == -1
    assert rational_arithmetic("1/2", "2/4", Op.CMP) == 0
    assert rational_arithmetic("3/4", op=Op.NEG) == Fraction(-3, 4)


@pytest.mark.parametrize("text, expected", [
    ("5", Fraction(5)),
    ("-3/6", Fraction(-1, 2)),
    (" 7 / 21 ", Fraction(1, 3)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "1.5", "abc", "", "3/-4"])
def test_parse_rational_rejects(text):
    with pytest.raises(MalformedInputError):
        parse_rational(text)


def test_booleans_are_not_rationals():
    with pytest.raises(MalformedInputError):
        to_rational(True)


@pytest.mark.parametrize("q, s, t, expected", [
    (4, 1, 1, True),
    (9, 1, 1, False),
    (2, 1, 1, True),
    (0, 0, 0, True),
])
def test_sqrt_sum_leq_examples(q, s, t, expected):
    assert sqrt_sum_leq(q, s, t) is expected


def test_sqrt_sum_leq_negative_input():
    with pytest.raises(DomainError):
        sqrt_sum_leq(-1, 1, 1)


@given(st.integers(0, 200), st.integers(0, 200))
def test_sqrt_sum_leq_on_perfect_squares(a, b):
    assert sqrt_sum_leq((a + b) ** 2, a * a, b * b)
    assert sqrt_sum_leq((a + b) ** 2 + 1, a * a, b * b) is False


@given(rationals, rationals)
def test_format_parse_agree(a, b):
    total = rational_arithmetic(a, b, Op.ADD)
    assert parse_rational(format_rational(total)) == total


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    add = lambda p, q: rational_arithmetic(p, q, Op.ADD)
    mul = lambda p, q: rational_arithmetic(p, q, Op.MUL)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, rational_arithmetic(a, op=Op.NEG)) == 0
    assert rational_arithmetic(add(a, b), b, Op.SUB) == a


@given(rationals, nonzero_rationals)
def test_nonzero_rationals_are_invertible(a, b):
    inverse = rational_arithmetic(1, b, Op.DIV)
    assert rational_arithmetic(b, inverse, Op.MUL) == 1
    assert rational_arithmetic(rational_arithmetic(a, b, Op.DIV), b, Op.MUL) == a


nonnegative = st.fractions(min_value=0, max_value=50, max_denominator=20)


@given(nonnegative, nonnegative, nonnegative)
def test_sqrt_sum_leq_agrees_with_floats_off_the_boundary(q, s, t):
    gap = math.sqrt(s) + math.sqrt(t) - math.sqrt(q)
    assume(abs(gap) > 1e-9)
    assert sqrt_sum_leq(q, s, t) is (gap > 0)
