"""Tokenizer and recursive-descent parser shared by all element grammars.

The surface syntax is the same for every algebra in the package::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary | '/' unary)*
    unary   := '-' unary | atom
    atom    := number | name | name '[' index (',' index)* ']'
             | '[' expr ',' expr ']'          (commutator)
             | '(' expr ')'

``s2`` is the name of sqrt(2).  Parsing yields a small AST that
:func:`evaluate` folds into whatever algebra the caller supplies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coeff import SQRT2, Scalar

__all__ = ["ParseError", "parse", "evaluate", "parse_partition", "Num", "Name", "Sum", "Prod", "Quot", "Neg", "Comm"]


class ParseError(ValueError):
    """Raised with the offending text and a 0-based column."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(str(self))

    def __str__(self):
        if not self.text:
            return self.message
        return f"{self.message} at column {self.pos + 1}\n  {self.text}\n  {' ' * self.pos}^"


# AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Scalar


@dataclass(frozen=True)
class Name:
    name: str
    indices: tuple = ()
    pos: int = 0


@dataclass(frozen=True)
class Sum:
    items: tuple  # of (sign, node)


@dataclass(frozen=True)
class Prod:
    items: tuple


@dataclass(frozen=True)
class Quot:
    num: object
    den: object
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    item: object


@dataclass(frozen=True)
class Comm:
    left: object
    right: object


# tokenizer ---------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_](?:[A-Za-z0-9_]|-(?=\d+[A-Za-z]))*)
  | (?P<op>[-+*/\[\](),])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            what = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise ParseError(f"expected {value!r}, found {what}", self.text, tok[2])
        return tok

    def error(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def expr(self):
        items = [(1, self.term())]
        while self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            items.append((sign, self.term()))
        return items[0][1] if len(items) == 1 else Sum(tuple(items))

    def term(self):
        node = self.unary()
        factors = [node]
        while self.peek()[1] in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op[1] == "*":
                factors.append(rhs)
            else:
                left = factors[0] if len(factors) == 1 else Prod(tuple(factors))
                factors = [Quot(left, rhs, op[2])]
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return Neg(self.unary())
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.atom()

    def index(self):
        neg = False
        while self.peek()[1] in ("-", "+"):
            neg ^= self.take()[1] == "-"
        tok = self.take()
        if tok[0] != "num":
            raise ParseError("expected an integer index", self.text, tok[2])
        value = Fraction(int(tok[1]))
        if self.peek()[1] == "/":
            self.take()
            den = self.take()
            if den[0] != "num":
                raise ParseError("expected an integer denominator", self.text, den[2])
            value /= int(den[1])
        return -value if neg else value

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(Scalar(int(value)))
        if kind == "name":
            self.take()
            if value == "s2":
                return Num(SQRT2)
            indices = ()
            if self.peek()[1] == "[" and self.peek()[2] == pos + len(value):
                self.take()
                idx = [self.index()]
                while self.peek()[1] == ",":
                    self.take()
                    idx.append(self.index())
                self.expect("]")
                indices = tuple(idx)
            return Name(value, indices, pos)
        if value == "[":
            self.take()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Comm(left, right)
        if value == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {value!r}")


def parse(text: str):
    """Parse ``text`` into an AST; raises :class:`ParseError`."""
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.error(f"unexpected {p.peek()[1]!r}")
    return node


def evaluate(
    node,
    atom: Callable,
    *,
    mul: Callable | None = None,
    bracket: Callable | None = None,
    text: str = "",
):
    """Fold an AST into an algebra.

    ``atom(name, indices)`` returns an algebra element.  Numbers evaluate to
    :class:`Scalar`; scalars combine with elements through ``*`` and ``+`` of
    the element type.  ``mul`` multiplies two non-scalar elements and
    ``bracket`` evaluates ``[a, b]``; either may be omitted when the algebra
    has no such operation.
    """

    def ev(n):
        if isinstance(n, Num):
            return n.value
        if isinstance(n, Name):
            try:
                return atom(n.name, n.indices)
            except ParseError:
                raise
            except (KeyError, ValueError) as exc:
                msg = exc.args[0] if exc.args else str(exc)
                raise ParseError(str(msg), text, n.pos) from None
        if isinstance(n, Neg):
            return -ev(n.item)
        if isinstance(n, Sum):
            total = None
            for sign, item in n.items:
                v = ev(item)
                v = v if sign > 0 else -v
                total = v if total is None else total + v
            return total
        if isinstance(n, Prod):
            acc = ev(n.items[0])
            for item in n.items[1:]:
                acc = _times(acc, ev(item), mul)
            return acc
        if isinstance(n, Quot):
            den = ev(n.den)
            if not isinstance(den, Scalar):
                raise ParseError("can only divide by a scalar", text, n.pos)
            if den.is_zero():
                raise ParseError("division by zero", text, n.pos)
            return _times(ev(n.num), den.inverse(), mul)
        if isinstance(n, Comm):
            if bracket is None:
                raise ParseError("commutators are not available in this grammar", text, 0)
            return bracket(ev(n.left), ev(n.right))
        raise TypeError(n)

    return ev(node)


def _times(a, b, mul):
    if isinstance(a, Scalar) or isinstance(b, Scalar):
        return a * b
    if mul is None:
        raise ParseError("product of two non-scalar elements is not defined here")
    return mul(a, b)


def parse_partition(text: str, start: int = 0) -> tuple:
    """Parse ``[3,1]`` (or ``[]``) into a weakly decreasing tuple of positive ints."""
    s = text.strip()
    offset = text.find(s[:1]) if s else 0
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("a partition is written like [3,1]", text, start + offset)
    body = s[1:-1].strip()
    if not body:
        return ()
    parts = []
    for chunk in body.split(","):
        chunk = chunk.strip()
        if not chunk.isdigit() or int(chunk) <= 0:
            raise ParseError(f"bad part {chunk!r}", text, start + text.find(chunk))
        parts.append(int(chunk))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ParseError("parts must be weakly decreasing", text, start + offset)
    return tuple(parts)
