"""Level-one Fock module realized on partitions (charge-zero Maya diagrams).

A partition ``p`` corresponds to the occupied set ``S(p) = {p_i - i}``.  The
monomial ``t^k f(D)`` moves one particle from ``j`` to ``j - k`` with weight
``f(-j-1)`` and the usual fermionic sign; for ``k = 0`` it acts diagonally by
the normally ordered sum, which vanishes on the vacuum.  ``C`` acts as 1.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .coeff import ONE, ZERO, Scalar, as_scalar
from .wenv import C, W00, EnvElement, _gen_lie
from .wlie import DPolynomial, LieElement, render_coeff

__all__ = [
    "Partition",
    "FockVector",
    "maya",
    "from_maya",
    "hops",
    "act_basis_lie",
    "act_lie",
    "act_env",
    "partitions",
    "partitions_upto",
    "parse_fock",
    "render_partition",
]

Partition = tuple  # weakly decreasing positive ints


def _canonical(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return p


class _MayaSet:
    """The occupied set of a partition: explicit sites plus everything below ``floor``."""

    __slots__ = ("sites", "floor")

    def __init__(self, sites: frozenset, floor: int):
        self.sites = sites
        self.floor = floor

    def __contains__(self, j: int) -> bool:
        return j < self.floor or j in self.sites

    def __iter__(self) -> Iterator[int]:
        yield from sorted(self.sites, reverse=True)
        j = self.floor - 1
        while True:
            yield j
            j -= 1

    def __repr__(self):
        head = ",".join(str(j) for j in sorted(self.sites, reverse=True))
        return f"{{{head}{',' if head else ''}{self.floor - 1},{self.floor - 2},...}}"


def maya(p: Partition) -> _MayaSet:
    """Occupied set ``{p_i - i : i >= 1}`` (infinite; everything below ``-len(p)`` is filled)."""
    p = _canonical(p)
    n = len(p)
    return _MayaSet(frozenset(p[i] - (i + 1) for i in range(n)), -n)


def from_maya(occupied: Iterable[int]) -> Partition:
    """Partition from the occupied sites lying at or above the first filled tail."""
    s = sorted(set(occupied), reverse=True)
    parts = []
    for i, j in enumerate(s, start=1):
        v = j + i
        if v < 0:
            raise ValueError("occupied set is not of charge zero")
        if v == 0:
            break
        parts.append(v)
    return tuple(parts)


@lru_cache(maxsize=500_000)
def hops(k: int, p: Partition) -> tuple:
    """Legal single-particle moves ``j -> j - k`` on ``S(p)``.

    Returns ``(target_partition, sign, j)`` triples; ``k`` must be nonzero.
    """
    if k == 0:
        raise ValueError("hops are only defined for nonzero t-degree")
    n = len(p)
    lo = -n - abs(k) - 1
    occ = {p[i] - (i + 1) for i in range(n)}
    occ.update(range(lo, -n))
    out = []
    for j in sorted(occ, reverse=True):
        tgt = j - k
        if tgt in occ or tgt < lo:
            continue
        a, b = (tgt, j) if tgt < j else (j, tgt)
        between = sum(1 for x in occ if a < x < b)
        new = (occ - {j}) | {tgt}
        out.append((from_maya(new), -1 if between % 2 else 1, j))
    return tuple(out)


@lru_cache(maxsize=500_000)
def _diag_sites(p: Partition) -> tuple:
    """Sites contributing to the ``k = 0`` action: (+1, j) for j >= 0 occupied, (-1, j) for j < 0 empty."""
    n = len(p)
    occ = {p[i] - (i + 1) for i in range(n)}
    plus = tuple(j for j in occ if j >= 0)
    minus = tuple(j for j in range(-n, 0) if j not in occ)
    return tuple((1, j) for j in plus) + tuple((-1, j) for j in minus)


class FockVector:
    """Finite combination of partitions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for p, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                clean[_canonical(p)] = c
        self.terms = clean

    @classmethod
    def basis(cls, p: Partition = (), coeff=ONE) -> "FockVector":
        return cls({_canonical(p): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, ZERO) + c
        return FockVector(terms)

    def __neg__(self):
        return FockVector({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        try:
            s = as_scalar(s)
        except TypeError:
            return NotImplemented
        return FockVector({p: c * s for p, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"FockVector({render_fock(self)!r})"

    def __str__(self):
        return render_fock(self)


def _add_into(acc: dict, p, c):
    v = acc.get(p)
    acc[p] = c if v is None else v + c


def _act_component(k: int, f: DPolynomial, p: Partition, acc: dict, scale: Scalar):
    if k == 0:
        total = ZERO
        for sign, j in _diag_sites(p):
            v = f(-j - 1)
            total = total + v if sign > 0 else total - v
        if total:
            _add_into(acc, p, total * scale)
        return
    for q, sign, j in hops(k, p):
        v = f(-j - 1)
        if v:
            _add_into(acc, q, v * scale if sign > 0 else -(v * scale))


def act_basis_lie(k: int, f: DPolynomial, p: Partition) -> FockVector:
    """Action of the single monomial block ``t^k f(D)`` on the basis vector ``|p>``."""
    acc: dict = {}
    _act_component(k, f, _canonical(p), acc, ONE)
    return FockVector(acc)


def act_lie(x: LieElement, v: FockVector) -> FockVector:
    """Action of a Lie algebra element (``C`` acting as 1) on a Fock vector."""
    comps = x.components()
    acc: dict = {}
    for p, c in v.terms.items():
        for k, f in comps.items():
            _act_component(k, f, p, acc, c)
        if x.central:
            _add_into(acc, p, x.central * c)
    return FockVector(acc)


@lru_cache(maxsize=500_000)
def _act_generator(g, p: Partition) -> tuple:
    if g == C:
        return ((p, ONE),)
    if g == W00:
        return ()
    x = _gen_lie(g)
    acc: dict = {}
    for k, f in x.components().items():
        _act_component(k, f, p, acc, ONE)
    return tuple((q, c) for q, c in acc.items() if c)


def act_env(a: EnvElement, v: FockVector) -> FockVector:
    """Apply each word right to left; ``C`` acts as 1 and ``w[0,0]`` as 0."""
    total: dict = {}
    for word, coeff in a.terms.items():
        cur = dict(v.terms)
        for g in reversed(word):
            nxt: dict = {}
            for p, c in cur.items():
                for q, d in _act_generator(g, p):
                    _add_into(nxt, q, c * d)
            cur = {q: c for q, c in nxt.items() if c}
            if not cur:
                break
        for q, c in cur.items():
            _add_into(total, q, c * coeff)
    return FockVector(total)


# enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n``, largest parts first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> list:
    return [p for m in range(n + 1) for p in partitions(m)]


# rendering & parsing -----------------------------------------------------


def render_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def render_fock(v: FockVector) -> str:
    if v.is_zero():
        return "0"
    keys = sorted(v.terms, key=lambda p: (sum(p), p))
    return " + ".join(render_coeff(v.terms[p]) + render_partition(p) for p in keys)


_PARTITION_LITERAL = re.compile(r"(?<![A-Za-z0-9_\]])\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]")


def parse_fock(text: str) -> FockVector:
    """Parse ``1*[2] + -1*[1,1]``; a bare ``[3,1]`` means that basis vector."""
    from .grammar import ParseError, evaluate, parse, parse_partition

    literals = []

    def stash(m):
        literals.append((m.group(0), m.start()))
        name = f"P{len(literals) - 1}"
        return name + " " * max(0, len(m.group(0)) - len(name))

    rewritten = _PARTITION_LITERAL.sub(stash, text)

    def atom(name, indices):
        if name.startswith("P") and name[1:].isdigit() and not indices:
            lit, pos = literals[int(name[1:])]
            return FockVector.basis(parse_partition(lit, pos))
        raise KeyError(f"unknown Fock vector atom {name!r}")

    try:
        value = evaluate(parse(rewritten), atom, text=text)
    except ParseError as exc:
        raise ParseError(exc.message, text, exc.pos) from None
    if isinstance(value, Scalar):
        if value.is_zero():
            return FockVector()
        raise ParseError("a Fock vector needs a partition such as [] or [2,1]", text, 0)
    return value


# integer fast path -------------------------------------------------------


class GradedIntegerModel:
    """Integer matrices of ``t^k D^l`` between fixed-size blocks of partitions.

    Built from the same :func:`hops` and diagonal tables as the exact action,
    so a commutator check here exercises the same sign and weight rules.
    Only integer-coefficient elements are supported.
    """

    def __init__(self):
        import numpy as np

        self._np = np
        self._index: dict = {}
        self._blocks: dict = {}

    def index(self, n: int) -> dict:
        idx = self._index.get(n)
        if idx is None:
            idx = {p: i for i, p in enumerate(partitions(n))} if n >= 0 else {}
            self._index[n] = idx
        return idx

    def block(self, k: int, l: int, n: int):
        """Matrix of ``t^k D^l`` from size ``n`` to size ``n - k``."""
        key = (k, l, n)
        m = self._blocks.get(key)
        if m is not None:
            return m
        np = self._np
        src, dst = self.index(n), self.index(n - k)
        m = np.zeros((len(dst), len(src)), dtype=np.int64)
        for p, i in src.items():
            if k == 0:
                m[i, i] = sum(s * (-j - 1) ** l for s, j in _diag_sites(p))
            else:
                for q, s, j in hops(k, p):
                    m[dst[q], i] += s * (-j - 1) ** l
        self._blocks[key] = m
        return m

    def lie_block(self, x: LieElement, n: int):
        np = self._np
        out = None
        for (k, l), c in x.terms.items():
            if not (c.is_rational() and c.rat.denominator == 1):
                raise ValueError("integer model needs integer coefficients")
            term = int(c.rat) * self.block(k, l, n)
            out = term if out is None else out + term
        if x.central:
            eye = int(x.central.rat) * np.eye(len(self.index(n)), dtype=np.int64)
            out = eye if out is None else out + eye
        return out


def representation_defects(
    max_t: int, max_d: int, max_size: int, model=None, bracket_fn=None
) -> list:
    """Monomial pairs and source sizes where ``[act x, act y] != act [x, y]``.

    Covers ``x = t^r D^a``, ``y = t^s D^b`` with ``|r|, |s| <= max_t`` and
    ``a, b <= max_d`` on every partition of size ``<= max_size``.
    """
    from .wlie import bracket, w

    bracket_fn = bracket_fn or bracket
    np_model = model or GradedIntegerModel()
    np = np_model._np
    mons = [(k, l) for k in range(-max_t, max_t + 1) for l in range(max_d + 1)]
    bad = []
    for a in mons:
        for b in mons:
            z = bracket_fn(w(*a), w(*b))
            for n in range(max_size + 1):
                xy = _compose(np_model, a, b, n)
                yx = _compose(np_model, b, a, n)
                rhs = np_model.lie_block(z, n) if not z.is_zero() else None
                lhs = _sub(xy, yx)
                if not _same(np, lhs, rhs):
                    bad.append((a, b, n))
    return bad


def _compose(model, a, b, n):
    (r, x), (s, y) = a, b
    if n - s < 0 or n - s - r < 0:
        return None
    inner = model.block(s, y, n)
    if inner.size == 0:
        return None
    return model.block(r, x, n - s) @ inner


def _sub(u, v):
    if u is None:
        return None if v is None else -v
    return u if v is None else u - v


def _same(np, u, v):
    if u is None and v is None:
        return True
    if u is None:
        return not np.any(v)
    if v is None:
        return not np.any(u)
    return np.array_equal(u, v)
