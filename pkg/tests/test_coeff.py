from fractions import Fraction

import pytest
from hypothesis import given

from strategies import nonzero_scalars, scalars
from wminus.coeff import ONE, SQRT2, ZERO, Scalar, parse_scalar, render_scalar
from wminus.grammar import ParseError


def test_difference_of_squares():
    assert (ONE + SQRT2) * (ONE - SQRT2) == Scalar(-1)


def test_inverse_of_sqrt2():
    assert SQRT2.inverse() == Scalar(0, Fraction(1, 2))


def test_zero():
    assert Scalar(0, 0).is_zero()
    assert not SQRT2.is_zero()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(nonzero_scalars)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a.norm() != 0


@given(scalars)
def test_render_round_trip(a):
    assert parse_scalar(render_scalar(a)) == a


def test_render_forms():
    assert render_scalar(Scalar(Fraction(3, 2), -1)) == "3/2 + -1*s2"
    assert render_scalar(Scalar(0, 2)) == "2*s2"
    assert render_scalar(Scalar(-4)) == "-4"


def test_parse_rejects_names():
    with pytest.raises(ParseError):
        parse_scalar("x + 1")
