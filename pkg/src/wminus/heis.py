"""Twisted Heisenberg algebra with half-integer modes and its embedding.

Modes ``h[n/2]`` with ``n`` odd satisfy ``[h_a, h_b] = a * delta(a, -b)``.
Internally a mode is stored by its odd numerator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .coeff import ONE, ZERO, SQRT2, Scalar, as_scalar, render_scalar
from .wlie import LieElement, render_coeff

__all__ = ["HeisElement", "heis_bracket", "embed_heis", "parse_heis", "h"]

_INV_SQRT2 = SQRT2 / 2


class HeisElement:
    """Finite combination of modes ``h[n/2]`` (``n`` odd) plus a unit coefficient."""

    __slots__ = ("terms", "unit")

    def __init__(self, terms: Mapping | None = None, unit=ZERO):
        clean = {}
        for n, c in (terms or {}).items():
            n = int(n)
            if n % 2 == 0:
                raise ValueError(f"mode index {n}/2 is not a half-integer")
            c = as_scalar(c)
            if c:
                clean[n] = c
        self.terms = clean
        self.unit = as_scalar(unit)

    def is_zero(self):
        return not self.terms and not self.unit

    def __add__(self, other):
        if not isinstance(other, HeisElement):
            try:
                other = HeisElement({}, as_scalar(other))
            except TypeError:
                return NotImplemented
        terms = dict(self.terms)
        for n, c in other.terms.items():
            terms[n] = terms.get(n, ZERO) + c
        return HeisElement(terms, self.unit + other.unit)

    __radd__ = __add__

    def __neg__(self):
        return HeisElement({n: -c for n, c in self.terms.items()}, -self.unit)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        try:
            s = as_scalar(s)
        except TypeError:
            return NotImplemented
        return HeisElement({n: c * s for n, c in self.terms.items()}, self.unit * s)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HeisElement):
            return NotImplemented
        return self.terms == other.terms and self.unit == other.unit

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.unit))

    def __repr__(self):
        return f"HeisElement({render_heis(self)!r})"

    def __str__(self):
        return render_heis(self)


def h(numerator: int, coeff=ONE) -> HeisElement:
    """The mode ``h[numerator/2]``."""
    return HeisElement({numerator: coeff})


def heis_bracket(a: HeisElement, b: HeisElement) -> Scalar:
    total = ZERO
    for n, c in a.terms.items():
        d = b.terms.get(-n)
        if d is not None:
            total = total + c * d * Fraction(n, 2)
    return total


def embed_heis(a: HeisElement) -> LieElement:
    """``h[(2n+1)/2] -> w[2n+1,0] / sqrt 2``; the unit goes to ``C``."""
    return LieElement({(n, 0): c * _INV_SQRT2 for n, c in a.terms.items()}, a.unit)


def render_heis(a: HeisElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    if a.unit:
        text = render_scalar(a.unit)
        parts.append(f"({text})" if (a.unit.rat and a.unit.surd) else text)
    for n in sorted(a.terms):
        parts.append(f"{render_coeff(a.terms[n])}h[{n}/2]")
    return " + ".join(parts)


def _heis_atom(name, indices):
    if name == "h" and len(indices) == 1:
        twice = indices[0] * 2
        if twice.denominator != 1 or twice.numerator % 2 == 0:
            raise ValueError("Heisenberg modes are h[n/2] with n odd")
        return h(int(twice))
    raise KeyError(f"unknown Heisenberg element {name!r}")


def parse_heis(text: str) -> HeisElement:
    """Parse ``h[1/2] + 3*h[-5/2]``; ``[a, b]`` evaluates to a unit multiple."""
    from .grammar import evaluate, parse

    def br(a, b):
        return HeisElement({}, heis_bracket(a, b))

    value = evaluate(parse(text), _heis_atom, bracket=br, text=text)
    if isinstance(value, Scalar):
        return HeisElement({}, value)
    return value
