"""Arithmetic in the enveloping algebra U(g) on its PBW basis.

A PBW monomial is an exponent tuple aligned with the algebra's basis order;
odd slots are 0 or 1. Elements are sparse ``{monomial: Fraction}`` maps.

Products go through :func:`_mono_times_gen`, which appends one generator to a
normal monomial and re-sorts it with the supercommutation relations, memoized
per algebra. :func:`straighten` is the plain leftmost-rewriting procedure on
words and is kept as an independent route to the same normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .exactq import render_terms
from .superlie import EVEN, ODD, LieSuperalgebra

Mono = tuple
Scalar = Union[int, Fraction]


def mono_key(exps: Sequence[int]) -> tuple:
    """Canonical monomial order: ascending total degree, then descending lex."""
    return (sum(exps), tuple(-e for e in exps))


def mono_parity(g: LieSuperalgebra, exps: Sequence[int]) -> int:
    return sum(exps[i] for i in g.odd) % 2


def mono_text(g: LieSuperalgebra, exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(g.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def is_normal(g: LieSuperalgebra, exps: Sequence[int]) -> bool:
    return len(exps) == g.dim and all(e >= 0 for e in exps) and all(exps[i] <= 1 for i in g.odd)


class UElement:
    """Immutable element of U(g), stored as a sparse map from PBW monomials to Fractions."""

    __slots__ = ("alg", "_terms")

    def __init__(self, alg: LieSuperalgebra, terms: Mapping[Mono, Scalar] | None = None):
        self.alg = alg
        clean: dict = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if not is_normal(alg, exps):
                raise ValueError(f"{exps} is not a PBW monomial of {alg.label}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, alg: LieSuperalgebra, terms: dict) -> UElement:
        # terms must already be normal monomials with nonzero Fractions
        obj = cls.__new__(cls)
        obj.alg = alg
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, alg: LieSuperalgebra) -> UElement:
        return cls._raw(alg, {})

    @classmethod
    def scalar(cls, alg: LieSuperalgebra, c: Scalar = 1) -> UElement:
        c = Fraction(c)
        return cls._raw(alg, {(0,) * alg.dim: c} if c else {})

    @classmethod
    def one(cls, alg: LieSuperalgebra) -> UElement:
        return cls.scalar(alg, 1)

    @classmethod
    def gen(cls, alg: LieSuperalgebra, which: int | str) -> UElement:
        i = alg.index(which) if isinstance(which, str) else which
        exps = [0] * alg.dim
        exps[i] = 1
        return cls._raw(alg, {tuple(exps): Fraction(1)})

    @classmethod
    def gens(cls, alg: LieSuperalgebra) -> tuple[UElement, ...]:
        return tuple(cls.gen(alg, i) for i in range(alg.dim))

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order (ascending degree, then descending lex)."""
        return sorted(self._terms.items(), key=lambda kv: mono_key(kv[0]))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Filtration degree (max total degree); -1 for zero."""
        return max((sum(e) for e in self._terms), default=-1)

    def parities(self) -> set[int]:
        return {mono_parity(self.alg, e) for e in self._terms}

    def parity(self) -> int:
        """Z2-degree of a homogeneous element; zero counts as even."""
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop() if ps else EVEN

    def is_homogeneous(self) -> bool:
        return len(self.parities()) <= 1

    # -- arithmetic -------------------------------------------------------
    def _same(self, other: UElement) -> None:
        if self.alg is not other.alg and self.alg != other.alg:
            raise ValueError("elements live in different algebras")

    def _lift(self, other):
        if isinstance(other, UElement):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return UElement.scalar(self.alg, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return UElement._raw(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> UElement:
        return UElement._raw(self.alg, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return UElement._raw(self.alg, {k: v * c for k, v in self._terms.items()} if c else {})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return u_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> UElement:
        if n < 0:
            raise ValueError("negative power")
        out = UElement.one(self.alg)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UElement.scalar(self.alg, other)
        if not isinstance(other, UElement):
            return NotImplemented
        return (self.alg is other.alg or self.alg == other.alg) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return render_terms((mono_text(self.alg, e), c) for e, c in self.items())

    def __repr__(self) -> str:
        return f"UElement({self.alg.label}, {str(self)!r})"


# -- the product --------------------------------------------------------------

def _cache(g: LieSuperalgebra, name: str) -> dict:
    return g._cache.setdefault(name, {})


def _acc(out: dict, terms: Mapping, scale: Fraction) -> None:
    for m, c in terms.items():
        v = out.get(m, 0) + c * scale
        if v:
            out[m] = v
        else:
            out.pop(m, None)


def _mono_times_gen(g: LieSuperalgebra, mono: Mono, k: int) -> dict:
    """Normal form of (PBW monomial) * b_k."""
    cache = _cache(g, "mg")
    key = (mono, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    last = max((i for i, e in enumerate(mono) if e), default=-1)
    par = g.parities
    if last < k or (last == k and par[k] == EVEN):
        new = list(mono)
        new[k] += 1
        res = {tuple(new): Fraction(1)}
    elif last == k:
        # odd square: b_k b_k = 1/2 [b_k, b_k]
        prefix = list(mono)
        prefix[k] -= 1
        prefix = tuple(prefix)
        res = {}
        for l, c in g.structure(k, k).items():
            _acc(res, _mono_times_gen(g, prefix, l), c / 2)
    else:
        # b_j b_k = (-1)^{|j||k|} b_k b_j + [b_j, b_k]
        j = last
        prefix = list(mono)
        prefix[j] -= 1
        prefix = tuple(prefix)
        sign = Fraction((-1) ** (par[j] * par[k]))
        res = {}
        for m, c in _mono_times_gen(g, prefix, k).items():
            _acc(res, _mono_times_gen(g, m, j), c * sign)
        for l, c in g.structure(j, k).items():
            _acc(res, _mono_times_gen(g, prefix, l), c)
    cache[key] = res
    return res


def _word_of(mono: Mono) -> list[int]:
    return [i for i, e in enumerate(mono) for _ in range(e)]


def _mono_times_mono(g: LieSuperalgebra, a: Mono, b: Mono) -> dict:
    cache = _cache(g, "mm")
    key = (a, b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    cur = {a: Fraction(1)}
    for k in _word_of(b):
        nxt: dict = {}
        for m, c in cur.items():
            _acc(nxt, _mono_times_gen(g, m, k), c)
        cur = nxt
    cache[key] = cur
    return cur


def u_mul(a: UElement, b: UElement) -> UElement:
    """Product in U(g), returned in normal form."""
    a._same(b)
    g = a.alg
    out: dict = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            _acc(out, _mono_times_mono(g, ma, mb), ca * cb)
    return UElement._raw(g, out)


def word_product(g: LieSuperalgebra, word: Iterable[int | str]) -> UElement:
    """Normal form of a product of generators, via the cached product."""
    out = UElement.one(g)
    for w in word:
        out = out * UElement.gen(g, w)
    return out


# -- literal rewriting ---------------------------------------------------------

def straighten(word: Sequence[int | str], g: LieSuperalgebra) -> UElement:
    """Rewrite a word in the generators to PBW normal form.

    The leftmost offending adjacent pair is rewritten each step: a descent
    ``b_j b_i`` (j > i) becomes ``(-1)^{|i||j|} b_i b_j + [b_j, b_i]`` and an odd
    square ``b_i b_i`` becomes ``1/2 [b_i, b_i]``. Degree never grows and, at
    fixed degree, the inversion count drops, so this terminates.
    """
    idx = tuple(g.index(w) if isinstance(w, str) else int(w) for w in word)
    for i in idx:
        if not 0 <= i < g.dim:
            raise ValueError(f"generator index {i} out of range")
    par = g.parities
    pending: dict[tuple, Fraction] = {idx: Fraction(1)}
    done: dict[Mono, Fraction] = {}
    while pending:
        nxt: dict[tuple, Fraction] = {}
        for w, c in pending.items():
            pos = next(
                (p for p in range(len(w) - 1) if w[p] > w[p + 1] or (w[p] == w[p + 1] and par[w[p]] == ODD)),
                None,
            )
            if pos is None:
                exps = [0] * g.dim
                for i in w:
                    exps[i] += 1
                _acc(done, {tuple(exps): Fraction(1)}, c)
                continue
            a, b = w[pos], w[pos + 1]
            head, tail = w[:pos], w[pos + 2 :]
            if a == b:
                for l, s in g.structure(a, a).items():
                    _acc(nxt, {head + (l,) + tail: Fraction(1)}, c * s / 2)
            else:
                _acc(nxt, {head + (b, a) + tail: Fraction(1)}, c * (-1) ** (par[a] * par[b]))
                for l, s in g.structure(a, b).items():
                    _acc(nxt, {head + (l,) + tail: Fraction(1)}, c * s)
        pending = nxt
    return UElement._raw(g, done)


# -- grading and actions ---------------------------------------------------------

def graded_component(e: UElement, parity: int) -> UElement:
    g = e.alg
    return UElement._raw(g, {m: c for m, c in e._terms.items() if mono_parity(g, m) == parity})


def _action(u: UElement, m: UElement, twist: int) -> UElement:
    u._same(m)
    if not u.is_homogeneous():
        raise ValueError("acting element must be homogeneous")
    pu = u.parity()
    out = UElement.zero(u.alg)
    for p in (EVEN, ODD):
        mp = graded_component(m, p)
        if mp:
            out = out + u * mp - mp * u * (-1) ** (pu * (p + twist))
    return out


def ad(u: UElement, m: UElement) -> UElement:
    """Adjoint action um - (-1)^{|u||m|} mu, per homogeneous component of m."""
    return _action(u, m, 0)


def ad_twist(u: UElement, m: UElement) -> UElement:
    """Twisted adjoint action um - (-1)^{|u|(|m|+1)} mu, per homogeneous component of m."""
    return _action(u, m, 1)


# -- filtration and growth -------------------------------------------------------

def monomials_upto(g: LieSuperalgebra, d: int) -> list[Mono]:
    """All PBW monomials of total degree <= d, in canonical order."""
    out: list[Mono] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == g.dim:
            out.append(tuple(acc))
            return
        top = min(left, 1) if g.parities[i] == ODD else left
        for e in range(top + 1):
            acc.append(e)
            rec(i + 1, left - e, acc)
            acc.pop()

    rec(0, d, [])
    out.sort(key=mono_key)
    return out


def count_filtered(g: LieSuperalgebra, n: int) -> int:
    """dim F_n U(g): number of PBW monomials of total degree <= n.

    Coefficients of (1+z)^q / (1-z)^p summed up to z^n, p = dim g0, q = dim g1.
    """
    if n < 0:
        return 0
    p, q = len(g.even), len(g.odd)
    series = [1] + [0] * n
    for _ in range(p):
        for k in range(1, n + 1):
            series[k] += series[k - 1]
    for _ in range(q):
        for k in range(n, 0, -1):
            series[k] += series[k - 1]
    return sum(series)


def count_filtered_closed_form(g: LieSuperalgebra, n: int) -> int:
    """Sum over subsets S of the odd basis of C(n - |S| + p, p)."""
    p = len(g.even)
    total = 0
    for s in range(len(g.odd) + 1):
        if n >= s:
            total += comb(len(g.odd), s) * comb(n - s + p, p)
    return total


@dataclass
class GrowthReport:
    degree: int | None
    window: tuple[int, int] | None
    counts: list[int] = field(default_factory=list)
    n_max: int = 0

    @property
    def conclusive(self) -> bool:
        return self.degree is not None

    def __str__(self) -> str:
        if not self.conclusive:
            return f"inconclusive up to n = {self.n_max}"
        return f"{self.degree} (differences of order {self.degree + 1} vanish for n in [{self.window[0]}, {self.window[1]}])"


def finite_difference(seq: Sequence[int], order: int) -> list[int]:
    out = list(seq)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def growth_degree(g: LieSuperalgebra, n_max: int, bosonized: bool = False, min_window: int = 2) -> GrowthReport:
    """Least k whose (k+1)-th difference of dim F_n vanishes on a tail of >= min_window points.

    With ``bosonized`` the counts are those of H(g) (twice those of U(g), t has degree 0).
    """
    if n_max < g.dim + 2:
        raise ValueError(f"n_max must be at least dim g + 2 = {g.dim + 2}")
    factor = 2 if bosonized else 1
    counts = [factor * count_filtered(g, n) for n in range(n_max + 1)]
    for k in range(n_max + 1):
        diff = finite_difference(counts, k + 1)
        tail = 0
        for v in reversed(diff):
            if v:
                break
            tail += 1
        if tail >= min_window:
            start = len(diff) - tail
            return GrowthReport(k, (start, len(diff) - 1), counts, n_max)
    return GrowthReport(None, None, counts, n_max)
