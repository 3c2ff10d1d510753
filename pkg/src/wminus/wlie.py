"""Differential operators on the circle, their central extension and W^- membership.

An element of the centrally extended algebra is a finite sum of monomials
``w[k,l] = t^k D^l`` plus a multiple of the central element ``C``.  The
bracket of ``t^r f(D)`` and ``t^s g(D)`` is

    t^(r+s) (f(D+s) g(D) - f(D) g(D+r)) + psi(t^r f, t^s g) C

with ``psi`` the cocycle implemented in :func:`cocycle_psi`.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .coeff import ONE, ZERO, Scalar, as_scalar, render_scalar

__all__ = [
    "DPolynomial",
    "LieElement",
    "shift_poly",
    "cocycle_psi",
    "bracket",
    "sigma_apply",
    "is_in_wminus",
    "wminus_basis_element",
    "w",
    "central",
    "parse_lie",
    "render_coeff",
]


# polynomials in D --------------------------------------------------------


class DPolynomial:
    """Polynomial in ``D`` with :class:`Scalar` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=ONE) -> "DPolynomial":
        return cls([ZERO] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "DPolynomial") -> "DPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return DPolynomial(
            (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)
        )

    def __neg__(self):
        return DPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DPolynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return DPolynomial()
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x.is_zero():
                    continue
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
            return DPolynomial(out)
        s = as_scalar(other)
        return DPolynomial(c * s for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "DPolynomial(0)"
        terms = [f"{render_coeff(c)}D^{i}" for i, c in enumerate(self.coeffs) if c]
        return "DPolynomial(" + " + ".join(reversed(terms)) + ")"


@lru_cache(maxsize=None)
def _binomial_row(n: int) -> tuple:
    return tuple(comb(n, i) for i in range(n + 1))


def shift_poly(f: DPolynomial, s) -> DPolynomial:
    """Return ``f(D + s)``."""
    s = as_scalar(s)
    if s.is_zero() or f.degree <= 0:
        return f
    out = [ZERO] * len(f.coeffs)
    powers = [ONE]
    for _ in range(f.degree):
        powers.append(powers[-1] * s)
    for n, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        row = _binomial_row(n)
        for i in range(n + 1):
            out[i] = out[i] + c * row[i] * powers[n - i]
    return DPolynomial(out)


def cocycle_psi(r: int, f: DPolynomial, s: int, g: DPolynomial) -> Scalar:
    """Central term of ``[t^r f(D), t^s g(D)]``.

    For ``r = -s >= 0`` this is ``sum_{-r <= j <= -1} f(j) g(j + r)``; the
    ``r < 0`` branch is fixed by antisymmetry; zero unless ``r + s = 0``.
    """
    if r + s != 0:
        return ZERO
    if r < 0:
        return -cocycle_psi(s, g, r, f)
    total = ZERO
    for j in range(-r, 0):
        total = total + f(j) * g(j + r)
    return total


# Lie algebra elements ----------------------------------------------------


class LieElement:
    """Finite combination of ``w[k,l]`` plus a central ``C`` coefficient."""

    __slots__ = ("terms", "central", "_hash")

    def __init__(self, terms: Mapping | None = None, central=ZERO):
        clean = {}
        for key, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                k, l = key
                if l < 0:
                    raise ValueError("D-degree must be nonnegative")
                clean[(int(k), int(l))] = c
        self.terms = clean
        self.central = as_scalar(central)
        self._hash = None

    # views ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms and self.central.is_zero()

    def components(self) -> dict:
        """Map t-degree -> DPolynomial in D."""
        by_k = defaultdict(dict)
        for (k, l), c in self.terms.items():
            by_k[k][l] = c
        return {
            k: DPolynomial(d.get(i, ZERO) for i in range(max(d) + 1)) for k, d in by_k.items()
        }

    @classmethod
    def from_components(cls, comps: Mapping, central=ZERO) -> "LieElement":
        terms = {}
        for k, poly in comps.items():
            for l, c in enumerate(poly.coeffs):
                if c:
                    terms[(k, l)] = c
        return cls(terms, central)

    def max_d_degree(self) -> int:
        return max((l for _, l in self.terms), default=-1)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, ZERO) + c
        return LieElement(terms, self.central + other.central)

    def __neg__(self):
        return LieElement({k: -c for k, c in self.terms.items()}, -self.central)

    def __sub__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, s):
        try:
            s = as_scalar(s)
        except TypeError:
            return NotImplemented
        return LieElement({k: c * s for k, c in self.terms.items()}, self.central * s)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.terms == other.terms and self.central == other.central

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.terms.items()), self.central))
        return self._hash

    def __repr__(self):
        return f"LieElement({render_lie(self)!r})"

    def __str__(self):
        return render_lie(self)


def w(k: int, l: int, coeff=ONE) -> LieElement:
    """The monomial ``t^k D^l``."""
    return LieElement({(k, l): coeff})


def central(coeff=ONE) -> LieElement:
    return LieElement({}, coeff)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Lie bracket in the centrally extended algebra; ``C`` and ``w[0,0]`` are central."""
    out: dict[int, DPolynomial] = {}
    c = ZERO
    xc = {k: f for k, f in x.components().items()}
    yc = {k: g for k, g in y.components().items()}
    for r, f in xc.items():
        for s, g in yc.items():
            part = shift_poly(f, s) * g - f * shift_poly(g, r)
            if not part.is_zero():
                prev = out.get(r + s)
                out[r + s] = part if prev is None else prev + part
            if r + s == 0:
                c = c + cocycle_psi(r, f, s, g)
    return LieElement.from_components(out, c)


def sigma_apply(x: LieElement) -> LieElement:
    """Anti-involution with ``t -> -t``, ``D -> -D`` and the decree ``w[0,0] -> -w[0,0]``.

    On ``t^k D^l`` other than ``w[0,0]`` the value is ``(-1)^k t^k (-D-k)^l``.
    """
    out = LieElement({}, -x.central)
    for (k, l), c in x.terms.items():
        if (k, l) == (0, 0):
            out = out + w(0, 0, -c)
            continue
        sign = -1 if k % 2 else 1
        poly = shift_poly(DPolynomial.monomial(l), k) if l else DPolynomial([ONE])
        if l % 2:
            sign = -sign
        # (-D-k)^l = (-1)^l (D+k)^l
        out = out + LieElement.from_components({k: poly * (c * sign)})
    return out


def is_in_wminus(x: LieElement) -> bool:
    """Membership in the ``-sigma``-fixed subalgebra (``C`` and ``w[0,0]`` allowed).

    A component ``t^j h(D)`` qualifies when ``p(D) = h(D - j/2)`` has only odd
    powers (``j`` even) or only even powers (``j`` odd).
    """
    for j, h in x.components().items():
        p = shift_poly(h, Fraction(-j, 2))
        wanted = 1 if j % 2 == 0 else 0
        for deg, c in enumerate(p.coeffs):
            if c.is_zero():
                continue
            if j == 0 and deg == 0:
                continue
            if deg % 2 != wanted:
                return False
    return True


@lru_cache(maxsize=None)
def wminus_basis_element(j: int, l: int) -> LieElement:
    """``b[j,l] = t^j (D + j/2)^l``; requires ``j + l`` odd, or ``(j,l) = (0,0)``."""
    if l < 0:
        raise ValueError("b[j,l] needs l >= 0")
    if (j, l) != (0, 0) and (j + l) % 2 == 0:
        raise ValueError(f"b[{j},{l}] violates the parity rule (j + l must be odd)")
    poly = shift_poly(DPolynomial.monomial(l), Fraction(j, 2))
    return LieElement.from_components({j: poly})


# rendering & parsing -----------------------------------------------------


def render_coeff(c: Scalar) -> str:
    """Coefficient prefix; wraps two-part scalars in parentheses."""
    text = render_scalar(c)
    return f"({text})*" if (c.rat and c.surd) else f"{text}*"


def render_lie(x: LieElement) -> str:
    if x.is_zero():
        return "0"
    keys = sorted(x.terms, key=lambda kl: (kl[0], -kl[1]))
    parts = [f"{render_coeff(x.terms[k])}w[{k[0]},{k[1]}]" for k in keys]
    if x.central:
        parts.append(f"{render_coeff(x.central)}C")
    return " + ".join(parts)


def _lie_atom(name, indices):
    if name == "C" and not indices:
        return central()
    if name in ("w", "b") and len(indices) == 2:
        if any(i.denominator != 1 for i in indices):
            raise ValueError(f"{name}[..] needs integer indices")
        k, l = (int(i) for i in indices)
        if l < 0:
            raise ValueError("D-degree must be nonnegative")
        return w(k, l) if name == "w" else wminus_basis_element(k, l)
    raise KeyError(f"unknown Lie algebra element {name!r}")


def parse_lie(text: str) -> LieElement:
    """Parse ``w[k,l]``, ``b[j,l]``, ``C``, scalar multiples, sums and ``[x, y]``."""
    from .grammar import ParseError, evaluate, parse

    value = evaluate(parse(text), _lie_atom, bracket=bracket, text=text)
    if isinstance(value, Scalar):
        if value.is_zero():
            return LieElement()
        raise ParseError("a bare scalar is not a Lie algebra element (use k*C)", text, 0)
    return value
