"""The bosonization H(g) = U(g) # kC2.

An :class:`HElement` is a pair ``(a0, a1)`` standing for ``a0 + a1*t`` where
``t`` is the grouplike involution acting on U(g) by the parity sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .pbw import UElement, graded_component, mono_parity
from .superlie import LieSuperalgebra


def sigma(a: UElement) -> UElement:
    """The parity automorphism: each PBW monomial scaled by (-1)^(odd exponents)."""
    g = a.alg
    return UElement._raw(g, {m: (-c if mono_parity(g, m) else c) for m, c in a._terms.items()})


class HElement:
    __slots__ = ("a0", "a1")

    def __init__(self, a0: UElement, a1: UElement | None = None):
        if a1 is None:
            a1 = UElement.zero(a0.alg)
        a0._same(a1)
        self.a0 = a0
        self.a1 = a1

    @property
    def alg(self) -> LieSuperalgebra:
        return self.a0.alg

    @classmethod
    def t(cls, g: LieSuperalgebra) -> HElement:
        return cls(UElement.zero(g), UElement.one(g))

    @classmethod
    def scalar(cls, g: LieSuperalgebra, c=1) -> HElement:
        return cls(UElement.scalar(g, c))

    @classmethod
    def gen(cls, g: LieSuperalgebra, which) -> HElement:
        return cls(UElement.gen(g, which))

    def is_zero(self) -> bool:
        return self.a0.is_zero() and self.a1.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def degree(self) -> int:
        return max(self.a0.degree(), self.a1.degree())

    def _lift(self, other):
        if isinstance(other, HElement):
            self.a0._same(other.a0)
            return other
        if isinstance(other, UElement):
            self.a0._same(other)
            return HElement(other)
        if isinstance(other, (int, Fraction)):
            return HElement.scalar(self.alg, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return HElement(self.a0 + other.a0, self.a1 + other.a1)

    __radd__ = __add__

    def __neg__(self) -> HElement:
        return HElement(-self.a0, -self.a1)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HElement(self.a0 * other, self.a1 * other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return h_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return h_mul(lifted, self)

    def __pow__(self, n: int) -> HElement:
        if n < 0:
            raise ValueError("negative power")
        out = HElement.scalar(self.alg, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, UElement)):
            other = self._lift(other)
        if not isinstance(other, HElement):
            return NotImplemented
        return self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self) -> int:
        return hash((self.a0, self.a1))

    def __str__(self) -> str:
        from .expr import render

        return render(self)

    def __repr__(self) -> str:
        return f"HElement({self.alg.label}, {str(self)!r})"


def h_mul(p: HElement, q: HElement) -> HElement:
    """(a + bt)(c + dt) = (ac + b sigma(d)) + (ad + b sigma(c)) t."""
    p.a0._same(q.a0)
    a, b, c, d = p.a0, p.a1, q.a0, q.a1
    return HElement(a * c + b * sigma(d), a * d + b * sigma(c))


def h_graded_component(p: HElement, parity: int) -> HElement:
    """Restrict both components to the given U-parity (t has degree 0)."""
    return HElement(graded_component(p.a0, parity), graded_component(p.a1, parity))


# -- the zero-divisor witness in H(gl(1,1)) ------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail and not self.ok else "")


def central_witness_check(g: LieSuperalgebra) -> list[Check]:
    """Verify that x - w*t and x + w*t (w = -x + 2uv) are nonzero central elements with product 0.

    ``g`` must have generators named x, y, u, v; the checks are meant for the
    gl(1,1) presentation and report failures rather than raising.
    """
    x, y, u, v = (UElement.gen(g, n) for n in "xyuv")
    t = HElement.t(g)
    w = -x + 2 * u * v
    W = HElement(w)
    X = HElement(x)
    checks: list[Check] = []

    def eq(name: str, lhs, rhs) -> None:
        diff = lhs - rhs
        checks.append(Check(name, diff.is_zero(), f"difference {diff}"))

    eq("w*x = x*w", w * x, x * w)
    eq("w*y = y*w", w * y, y * w)
    eq("w*u = -u*w", w * u, -(u * w))
    eq("w*v = -v*w", w * v, -(v * w))
    eq("w*t = t*w", W * t, t * W)
    wt = W * t
    for nm, gen in (("x", X), ("y", HElement(y)), ("u", HElement(u)), ("v", HElement(v)), ("t", t)):
        eq(f"w*t commutes with {nm}", wt * gen, gen * wt)
    eq("w^2 = x^2", w * w, x * x)
    left, right = X - wt, X + wt
    eq("(x - w*t)*(x + w*t) = x^2 - w^2", left * right, HElement(x * x - w * w))
    prod = left * right
    checks.append(Check("(x - w*t)*(x + w*t) = 0", prod.is_zero(), f"product {prod}"))
    checks.append(Check("x - w*t != 0", not left.is_zero()))
    checks.append(Check("x + w*t != 0", not right.is_zero()))
    return checks

