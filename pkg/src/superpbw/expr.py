"""Expression language for elements of U(g) and H(g).

Grammar (explicit ``*``; juxtaposition is an error)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | symbol ('^' nat)? | '(' expr ')' | '-' factor
    rational := int ('/' posint)?

``t`` is the grouplike of the bosonization and is only accepted when the
context says so.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exactq import render_terms
from .pbw import UElement, mono_text
from .superlie import LieSuperalgebra

T_SYMBOL = "t"
MAX_DEPTH = 200
MAX_EXPONENT = 1000


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


# -- tree ------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Prod:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Sym, Neg, Sum, Prod, Pow]


# -- tokens ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[start]!r}", start)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, names: Iterable[str], bosonized: bool):
        self.toks = tokenize(src)
        self.i = 0
        self.names = set(names)
        self.bosonized = bosonized
        self.depth = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, text, pos = self.take()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}, found {text or 'end of input'!r}", pos)

    def parse(self) -> Node:
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            if kind in ("sym", "int") or text == "(":
                raise ParseError("missing '*' (juxtaposition is not multiplication)", pos)
            raise ParseError(f"unexpected {text!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            node = Sum(node, self.term(), sign)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            node = Prod(node, self.factor())
        return node

    def factor(self) -> Node:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.peek()[2])
        try:
            return self._factor()
        finally:
            self.depth -= 1

    def _factor(self) -> Node:
        kind, text, pos = self.take()
        if kind == "int":
            num = int(text)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, t2, p2 = self.take()
                if k2 != "int" or int(t2) == 0:
                    raise ParseError("expected a positive integer denominator", p2)
                return Num(Fraction(num, int(t2)))
            return Num(Fraction(num))
        if kind == "sym":
            if text == T_SYMBOL and text not in self.names:
                if not self.bosonized:
                    raise ParseError("'t' is only available in bosonized mode", pos)
            elif text not in self.names:
                raise ParseError(f"unknown symbol {text!r}", pos)
            node: Node = Sym(text)
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.take()
                k2, t2, p2 = self.take()
                if k2 != "int":
                    raise ParseError("expected a non-negative integer exponent", p2)
                if int(t2) > MAX_EXPONENT:
                    raise ParseError(f"exponent larger than {MAX_EXPONENT}", p2)
                node = Pow(node, int(t2))
            return node
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and text == "-":
            return Neg(self.factor())
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse(src: str | bytes, names: Iterable[str], bosonized: bool = False) -> Node:
    """Parse ``src`` against a generator name table; raises :class:`ParseError`."""
    if isinstance(src, bytes):
        src = src.decode("utf-8", errors="replace")
    return _Parser(src, names, bosonized).parse()


# -- evaluation ------------------------------------------------------------------

def evaluate(node: Node, g: LieSuperalgebra, bosonized: bool = False):
    """Normal form of a tree: a UElement, or an HElement when ``bosonized``."""
    from .bosonize import HElement

    if bosonized:
        one = HElement.scalar(g, 1)
        leaf = lambda name: HElement.t(g) if name == T_SYMBOL else HElement.gen(g, name)
    else:
        one = UElement.one(g)
        leaf = lambda name: UElement.gen(g, name)

    def ev(n: Node):
        if isinstance(n, Num):
            return one * n.value
        if isinstance(n, Sym):
            return leaf(n.name)
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, Sum):
            return ev(n.left) + ev(n.right) * n.sign
        if isinstance(n, Prod):
            return ev(n.left) * ev(n.right)
        if isinstance(n, Pow):
            base = ev(n.base)
            out = one
            for _ in range(n.exp):
                out = out * base
            return out
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)


def normal_form(src: str, g: LieSuperalgebra, bosonized: bool = False):
    return evaluate(parse(src, g.names, bosonized), g, bosonized)


def _symbol_degree(n: Node) -> int:
    # syntactic degree, so that e.g. u*u is refused even where it evaluates to 0
    if isinstance(n, Num):
        return 0
    if isinstance(n, Sym):
        return 1
    if isinstance(n, Neg):
        return _symbol_degree(n.arg)
    if isinstance(n, Sum):
        return max(_symbol_degree(n.left), _symbol_degree(n.right))
    if isinstance(n, Prod):
        return _symbol_degree(n.left) + _symbol_degree(n.right)
    return _symbol_degree(n.base) * n.exp


def linear_form(node: Node, g: LieSuperalgebra) -> dict[int, Fraction]:
    """Coordinates of a rational-linear combination of generators; rejects anything else."""
    if _symbol_degree(node) > 1:
        raise ValueError("not a linear combination of generators")
    e = evaluate(node, g)
    out = {}
    for m, c in e.terms.items():
        if sum(m) != 1:
            raise ValueError(f"{e} is not a linear combination of generators")
        out[m.index(1)] = c
    return out


# -- rendering -------------------------------------------------------------------

def render(e) -> str:
    """Canonical text: ascending degree, ties by descending lex; the t-part follows with ``*t``."""
    from .bosonize import HElement

    if isinstance(e, UElement):
        return str(e)
    if isinstance(e, HElement):
        g = e.alg
        terms = [(mono_text(g, m), c) for m, c in e.a0.items()]
        for m, c in e.a1.items():
            txt = mono_text(g, m)
            terms.append((f"{txt}*t" if txt else T_SYMBOL, c))
        return render_terms(terms)
    raise TypeError(f"cannot render {type(e).__name__}")
