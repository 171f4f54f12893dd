"""Exact rational scalars and sparse commutative polynomials over Q.

Scalars are :class:`fractions.Fraction`. A :class:`PolyQ` maps exponent
tuples (one slot per variable) to nonzero Fractions; the zero polynomial
has no terms. Terms are printed in descending graded-lex order::

    >>> x, y = PolyQ.gens(("x", "y"))
    >>> str(x**2 - 2*x*y + Fraction(1, 3))
    'x^2 - 2*x*y + 1/3'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "PolyQ",
    "poly_add",
    "poly_mul",
    "poly_det",
    "format_rational",
    "parse_rational",
]


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (q > 0) into a Fraction."""
    text = text.strip()
    num, sep, den = text.partition("/")
    if sep and (not den.strip().isdigit() or int(den) == 0):
        raise ValueError(f"bad rational literal {text!r}")
    try:
        return Fraction(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"bad rational literal {text!r}") from None


def grlex_key(exps: Sequence[int]) -> tuple:
    return (sum(exps), tuple(exps))


class PolyQ:
    """Immutable sparse polynomial in a fixed, named list of commuting variables."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, Scalar] | None = None):
        self.vars = tuple(variables)
        clean = {}
        n = len(self.vars)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not fit variables {self.vars}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar, variables: Iterable[str]) -> PolyQ:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Iterable[str]) -> PolyQ:
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def gens(cls, variables: Iterable[str]) -> tuple[PolyQ, ...]:
        variables = tuple(variables)
        return tuple(cls.var(v, variables) for v in variables)

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> PolyQ:
        if isinstance(other, PolyQ):
            if other.vars != self.vars:
                raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return PolyQ(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> PolyQ:
        return PolyQ(self.vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ(self.vars, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return PolyQ(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyQ:
        if n < 0:
            raise ValueError("negative power")
        out = PolyQ.const(1, self.vars)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, images: Mapping[str, PolyQ]) -> PolyQ:
        """Apply the algebra endomorphism sending each named variable to a polynomial."""
        gens = PolyQ.gens(self.vars)
        targets = [images.get(v, g) for v, g in zip(self.vars, gens)]
        out = PolyQ(self.vars)
        for exps, c in self._terms.items():
            term = PolyQ.const(c, self.vars)
            for t, e in zip(targets, exps):
                term = term * t**e
            out = out + term
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other, self.vars)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyQ({self.vars!r}, {str(self)!r})"

    def __str__(self) -> str:
        return render_terms(
            ((_monomial_text(self.vars, e), c) for e, c in self.items())
        )


def _monomial_text(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_terms(terms: Iterable[tuple[str, Fraction]]) -> str:
    """Join ``(monomial_text, coeff)`` pairs as ``a - 2*b + 1/3``; empty text is the unit."""
    out = []
    for mono, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


def poly_add(a: PolyQ, b: PolyQ) -> PolyQ:
    if a.vars != b.vars:
        raise ValueError(f"variable lists differ: {a.vars} vs {b.vars}")
    return a + b


def poly_mul(a: PolyQ, b: PolyQ) -> PolyQ:
    if a.vars != b.vars:
        raise ValueError(f"variable lists differ: {a.vars} vs {b.vars}")
    return a * b


def poly_det(m: Sequence[Sequence[PolyQ]], variables: Sequence[str] | None = None) -> PolyQ:
    """Exact determinant by cofactor expansion along rows, memoized on column subsets.

    No division is needed, so the result is exact over Q[vars]. The 0x0
    determinant is 1; ``variables`` is required only in that case (default: none).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return PolyQ.const(1, variables or ())
    vs = m[0][0].vars
    if any(e.vars != vs for row in m for e in row):
        raise ValueError("matrix entries over different variable lists")

    # minor(r, cols) = det of rows r.. restricted to the column bitmask `cols`
    memo: dict[int, PolyQ] = {}

    def minor(cols: int) -> PolyQ:
        r = bin(cols).count("1")
        if r == n:
            return PolyQ.const(1, vs)
        if cols in memo:
            return memo[cols]
        acc = PolyQ(vs)
        sign = 1
        for c in range(n):
            if cols & (1 << c):
                continue
            entry = m[r][c]
            if entry:
                sub = minor(cols | (1 << c))
                if sub:
                    acc = acc + entry * sub * sign
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(0)
