"""The enveloping algebra of the ``-sigma``-fixed subalgebra, in PBW normal form.

Generators are the basis family of :func:`wminus.wlie.wminus_basis_element`
(keys ``(j, l)``) together with the central element ``C`` (key :data:`C`).
A word is in normal form when its letters are weakly increasing in
:func:`generator_order`: central letters first, then by ``j`` ascending and
``l`` ascending, so that positive t-degrees (which kill the vacuum of the
Fock module) sit on the right.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .coeff import ONE, ZERO, Scalar, as_scalar
from .wlie import LieElement, bracket, shift_poly, wminus_basis_element, render_coeff

__all__ = [
    "C",
    "W00",
    "EnvElement",
    "generator_order",
    "lie_to_generators",
    "pbw_normal_form",
    "multiply",
    "quotient_reduce",
    "env_bracket",
    "parse_env",
]

C = ("C",)
W00 = (0, 0)


def generator_order(g) -> tuple:
    if g == C:
        return (0, 0, 0)
    if g == W00:
        return (0, 1, 0)
    return (1, g[0], g[1])


def _check_generator(g):
    if g == C:
        return g
    j, l = g
    if (j, l) != (0, 0) and (j + l) % 2 == 0:
        raise ValueError(f"b[{j},{l}] is not a generator (j + l must be odd)")
    return (int(j), int(l))


def lie_to_generators(x: LieElement) -> dict:
    """Expand a W^- Lie element in the ``b[j,l]`` basis (plus ``C``, ``w[0,0]``)."""
    out = {}
    if x.central:
        out[C] = x.central
    for j, h in x.components().items():
        p = shift_poly(h, Fraction(-j, 2))
        for l, c in enumerate(p.coeffs):
            if c.is_zero():
                continue
            if (j, l) != (0, 0) and (j + l) % 2 == 0:
                raise ValueError(f"element has a component t^{j} outside W^-")
            out[(j, l)] = c
    return out


@lru_cache(maxsize=None)
def _gen_lie(g) -> LieElement:
    if g == C:
        return LieElement({}, ONE)
    return wminus_basis_element(*g)


@lru_cache(maxsize=None)
def _gen_bracket(a, b) -> tuple:
    """``[a, b]`` for two generators, as a tuple of (generator, coeff)."""
    if a == C or b == C or a == W00 or b == W00:
        return ()
    return tuple(lie_to_generators(bracket(_gen_lie(a), _gen_lie(b))).items())


@lru_cache(maxsize=200_000)
def _normal_word(word: tuple) -> tuple:
    """Normal form of a single word, as a tuple of (word, coeff) pairs."""
    for i in range(len(word) - 1):
        if generator_order(word[i]) > generator_order(word[i + 1]):
            break
    else:
        return ((word, ONE),)
    a, b = word[i], word[i + 1]
    acc: dict = {}
    _accumulate(acc, _normal_word(word[:i] + (b, a) + word[i + 2 :]), ONE)
    for g, c in _gen_bracket(a, b):
        _accumulate(acc, _normal_word(word[:i] + (g,) + word[i + 2 :]), c)
    return tuple((wd, c) for wd, c in acc.items() if c)


def _accumulate(acc: dict, pairs, scale: Scalar):
    for wd, c in pairs:
        acc[wd] = acc.get(wd, ZERO) + c * scale


class EnvElement:
    """Finite combination of normal-ordered words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {tuple(k): as_scalar(c) for k, c in (terms or {}).items() if as_scalar(c)}

    @classmethod
    def unit(cls, coeff=ONE) -> "EnvElement":
        return cls({(): coeff})

    @classmethod
    def generator(cls, g, coeff=ONE) -> "EnvElement":
        return cls({(_check_generator(g),): coeff})

    @classmethod
    def from_lie(cls, x: LieElement) -> "EnvElement":
        return cls({(g,): c for g, c in lie_to_generators(x).items()})

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> Scalar:
        return self.terms.get((), ZERO)

    def max_length(self) -> int:
        return max((len(wd) for wd in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, EnvElement):
            try:
                other = EnvElement.unit(as_scalar(other))
            except TypeError:
                return NotImplemented
        terms = dict(self.terms)
        for wd, c in other.terms.items():
            terms[wd] = terms.get(wd, ZERO) + c
        return EnvElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return EnvElement({wd: -c for wd, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            return multiply(self, other)
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return EnvElement({wd: c * s for wd, c in self.terms.items()})

    def __rmul__(self, other):
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self * s

    def __eq__(self, other):
        if isinstance(other, EnvElement):
            return self.terms == other.terms
        try:
            return self == EnvElement.unit(as_scalar(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"EnvElement({render_env(self)!r})"

    def __str__(self):
        return render_env(self)


def pbw_normal_form(word: Iterable, coeff=ONE) -> EnvElement:
    """Straighten a product of generators (keys ``(j, l)`` or :data:`C`)."""
    word = tuple(_check_generator(g) for g in word)
    return EnvElement(dict(_scaled(_normal_word(word), as_scalar(coeff))))


def _scaled(pairs, s):
    for wd, c in pairs:
        yield wd, c * s


def multiply(a: EnvElement, b: EnvElement) -> EnvElement:
    acc: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            _accumulate(acc, _normal_word(wa + wb), ca * cb)
    return EnvElement(acc)


def quotient_reduce(a: EnvElement) -> EnvElement:
    """Impose ``C = 1`` and ``w[0,0] = 0``; idempotent."""
    acc: dict = {}
    for wd, c in a.terms.items():
        if W00 in wd:
            continue
        stripped = tuple(g for g in wd if g != C)
        acc[stripped] = acc.get(stripped, ZERO) + c
    return EnvElement(acc)


def env_bracket(a: EnvElement, b: EnvElement) -> EnvElement:
    """``ab - ba`` in the quotient."""
    return quotient_reduce(multiply(a, b) - multiply(b, a))


def commutator(a: EnvElement, b: EnvElement) -> EnvElement:
    """``ab - ba`` without passing to the quotient."""
    return multiply(a, b) - multiply(b, a)


# rendering & parsing -----------------------------------------------------


def render_generator(g) -> str:
    return "C" if g == C else f"b[{g[0]},{g[1]}]"


def render_env(a: EnvElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for wd in sorted(a.terms, key=lambda wd: (len(wd), [generator_order(g) for g in wd])):
        c = a.terms[wd]
        if not wd:
            text = str(c)
            parts.append(f"({text})" if (c.rat and c.surd) else text)
        else:
            parts.append(render_coeff(c) + "*".join(render_generator(g) for g in wd))
    return " + ".join(parts)


def _env_atom(name, indices):
    if name == "C" and not indices:
        return EnvElement.generator(C)
    if name in ("b", "w") and len(indices) == 2:
        if any(i.denominator != 1 for i in indices):
            raise ValueError(f"{name}[..] needs integer indices")
        j, l = (int(i) for i in indices)
        if l < 0:
            raise ValueError("D-degree must be nonnegative")
        if name == "b":
            return EnvElement.generator((j, l))
        return EnvElement.from_lie(LieElement({(j, l): ONE}))
    raise KeyError(f"unknown enveloping-algebra generator {name!r}")


def parse_env(text: str) -> EnvElement:
    """Parse words like ``b[1,0]*b[-1,0] + 2*C``; ``w[k,l]`` must lie in W^-."""
    from .grammar import evaluate, parse

    value = evaluate(parse(text), _env_atom, mul=multiply, bracket=commutator, text=text)
    if isinstance(value, Scalar):
        return EnvElement.unit(value)
    return value
