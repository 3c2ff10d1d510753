"""Exact arithmetic in the real quadratic field Q(sqrt 2).

Every coefficient in the package is a :class:`Scalar`.  Values are immutable
and hashable, so they can be used as dictionary keys and shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = ["Scalar", "ScalarLike", "as_scalar", "parse_scalar", "ZERO", "ONE", "SQRT2"]


class Scalar:
    """An element ``rat + surd*sqrt(2)`` with both parts rational."""

    __slots__ = ("rat", "surd", "_hash")

    def __init__(self, rat=0, surd=0):
        self.rat = Fraction(rat)
        self.surd = Fraction(surd)
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def sqrt2(cls) -> "Scalar":
        return cls(0, 1)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rat and not self.surd

    def is_rational(self) -> bool:
        return not self.surd

    def __bool__(self) -> bool:
        return not self.is_zero()

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - 2*surd**2``; zero only for the zero element."""
        return self.rat * self.rat - 2 * self.surd * self.surd

    def conjugate(self) -> "Scalar":
        return Scalar(self.rat, -self.surd)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.rat + other.rat, self.surd + other.surd)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.rat - other.rat, self.surd - other.surd)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Scalar(-self.rat, -self.surd)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.rat, self.surd, other.rat, other.surd
        if not b and not d:
            return Scalar(a * c)
        return Scalar(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return Scalar(self.rat / n, -self.surd / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.rat == other.rat and self.surd == other.surd

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rat, self.surd)) if self.surd else hash(self.rat)
        return self._hash

    def __float__(self):
        return float(self.rat) + float(self.surd) * 2 ** 0.5

    # rendering ------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({render_scalar(self)!r})"

    def __str__(self):
        return render_scalar(self)


ScalarLike = Union[Scalar, int, Fraction]


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(sqrt 2)")
    return s


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(x: Scalar) -> str:
    """Render as ``a``, ``b*s2`` or ``a + b*s2`` with signed rationals."""
    if not x.surd:
        return _rat(x.rat)
    if not x.rat:
        return f"{_rat(x.surd)}*s2"
    return f"{_rat(x.rat)} + {_rat(x.surd)}*s2"


def parse_scalar(text: str) -> Scalar:
    """Parse e.g. ``3/2 + -1*s2``; the only name allowed is ``s2``."""
    from .grammar import ParseError, evaluate, parse

    def no_atoms(name, indices):
        raise KeyError(f"unknown name {name!r} in a scalar")

    value = evaluate(parse(text), no_atoms, text=text)
    if not isinstance(value, Scalar):
        raise ParseError("not a scalar", text, 0)
    return value


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
