"""Degree-truncated centers and anticenters.

Every subspace is computed inside the filtration piece F_d (PBW monomials of
total degree <= d) as the kernel of an exact linear system. Multiplying by a
generator maps F_d into F_{d+1}, so the defining conditions are checked there.
Bases come back in RREF with columns in the canonical monomial order
(ascending degree, then descending lex), which makes reports reproducible.

Centrality here is ordinary commutation in the associative algebra, not the
super center.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

from .bosonize import Check, HElement, h_graded_component
from .exactq import PolyQ
from .expr import render
from .linalg import kernel, rref, same_span
from .pbw import UElement, ad_twist, graded_component, mono_key, mono_parity, monomials_upto
from .superlie import EVEN, ODD, LieSuperalgebra

Element = Union[UElement, HElement]

__all__ = [
    "BasisReport",
    "kernel",
    "center_basis",
    "anticenter_basis",
    "hcenter_basis",
    "anticenter_formula_member",
    "anticenter_formula_element",
    "check_ag_lemma",
    "check_hcenter_decomposition",
]


@dataclass
class BasisReport:
    space: str  # "center" | "anticenter" | "hcenter"
    degree: int
    elements: list = field(default_factory=list)
    algebra: str = "g"

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def part(self, parity: int) -> list:
        """Basis elements of the given parity (each basis element is homogeneous)."""
        return [e for e in self.elements if _component(e, parity) == e]

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "degree": self.degree,
            "space": self.space,
            "dimension": self.dimension,
            "basis": [render(e) for e in self.elements],
        }

    def __str__(self) -> str:
        head = f"{self.space} of {self.algebra} in degree <= {self.degree}: dimension {self.dimension}"
        return "\n".join([head] + [f"  {render(e)}" for e in self.elements])


# -- coordinates -------------------------------------------------------------------

class _Coords:
    """Column bookkeeping for F_d of U(g) or, with ``h=True``, of H(g) (t-slot 0/1)."""

    def __init__(self, g: LieSuperalgebra, d: int, h: bool = False, parity: int | None = None):
        self.g = g
        monos = monomials_upto(g, d)
        if parity is not None:
            monos = [m for m in monos if mono_parity(g, m) == parity]
        self.monos = monos
        self.h = h
        # U-part columns first, then the t-part
        self.columns = [(m, s) for s in ((0, 1) if h else (0,)) for m in monos]
        self.index = {c: i for i, c in enumerate(self.columns)}

    def element(self, col: int) -> Element:
        m, s = self.columns[col]
        u = UElement._raw(self.g, {m: Fraction(1)})
        if not self.h:
            return u
        z = UElement.zero(self.g)
        return HElement(u, z) if s == 0 else HElement(z, u)

    def from_vector(self, vec: Sequence[Fraction]) -> Element:
        parts = ({}, {})
        for (m, s), c in zip(self.columns, vec):
            if c:
                parts[s][m] = c
        if not self.h:
            return UElement._raw(self.g, parts[0])
        return HElement(UElement._raw(self.g, parts[0]), UElement._raw(self.g, parts[1]))

    def to_vector(self, e: Element) -> list[Fraction]:
        vec = [Fraction(0)] * len(self.columns)
        pieces = [(e.a0, 0), (e.a1, 1)] if isinstance(e, HElement) else [(e, 0)]
        for part, s in pieces:
            for m, c in part.terms.items():
                key = (m, s)
                if key not in self.index:
                    raise ValueError(f"{render(e)} does not lie in the coordinate space")
                vec[self.index[key]] = c
        return vec


def _solve(coords: _Coords, conditions: Sequence[Callable[[Element], Element]]) -> list[Element]:
    """Basis of {z in span(columns) : cond(z) = 0 for every cond}, in RREF."""
    ncols = len(coords.columns)
    rows = []
    for cond in conditions:
        images = [_flat(cond(coords.element(j))) for j in range(ncols)]
        keys = sorted(set().union(*images), key=lambda k: (k[1], mono_key(k[0])))
        rows += [[img.get(k, 0) for img in images] for k in keys]
    return [coords.from_vector(v) for v in kernel(rows, ncols)]


def _flat(e: Element) -> dict:
    if isinstance(e, HElement):
        out = {(m, 0): c for m, c in e.a0.terms.items()}
        out.update({(m, 1): c for m, c in e.a1.terms.items()})
        return out
    return {(m, 0): c for m, c in e.terms.items()}


def _component(e: Element, parity: int) -> Element:
    return h_graded_component(e, parity) if isinstance(e, HElement) else graded_component(e, parity)


def _merge_graded(g: LieSuperalgebra, d: int, solve_part: Callable[[int], list[Element]], h: bool) -> list[Element]:
    """Solve per parity and return the union in canonical RREF over all of F_d."""
    full = _Coords(g, d, h=h)
    vecs = [full.to_vector(e) for p in (EVEN, ODD) for e in solve_part(p)]
    return [full.from_vector(v) for v in rref(vecs, len(full.columns))]


# -- the three spaces ---------------------------------------------------------------

def center_basis(g: LieSuperalgebra, d: int) -> BasisReport:
    """Basis of {z in F_d U(g) : z b = b z for every generator b}."""
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    gens = UElement.gens(g)
    conds = [lambda z, b=b: z * b - b * z for b in gens]
    elems = _merge_graded(g, d, lambda p: _solve(_Coords(g, d, parity=p), conds), h=False)
    return BasisReport("center", d, elems, g.label)


def anticenter_basis(g: LieSuperalgebra, d: int) -> BasisReport:
    """Joint kernel of the twisted adjoint action of every generator on F_d."""
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    gens = UElement.gens(g)
    conds = [lambda z, b=b: ad_twist(b, z) for b in gens]
    elems = _merge_graded(g, d, lambda p: _solve(_Coords(g, d, parity=p), conds), h=False)
    return BasisReport("anticenter", d, elems, g.label)


def hcenter_basis(g: LieSuperalgebra, d: int) -> BasisReport:
    """Basis of {z in F_d H(g) : z commutes with every generator and with t}."""
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    gens = [HElement.gen(g, i) for i in range(g.dim)] + [HElement.t(g)]
    conds = [lambda z, b=b: z * b - b * z for b in gens]
    elems = _merge_graded(g, d, lambda p: _solve(_Coords(g, d, h=True, parity=p), conds), h=True)
    return BasisReport("hcenter", d, elems, g.label)


def commutes_with_generators(z: UElement) -> bool:
    return all((z * b - b * z).is_zero() for b in UElement.gens(z.alg))


# -- the anticenter of U(gl(1,1)) in closed form ---------------------------------------

XY = ("x", "y")


def tau(p: PolyQ) -> PolyQ:
    """The automorphism x -> x, y -> y - 1 of k[x, y]."""
    y = PolyQ.var("y", XY)
    return p.substitute({"y": y - 1})


def _gl11_indices(g: LieSuperalgebra) -> tuple[int, int, int, int]:
    try:
        idx = tuple(g.index(n) for n in "xyuv")
    except ValueError:
        raise ValueError("expected an algebra with generators x, y, u, v") from None
    if g.dim != 4:
        raise ValueError("expected the four-dimensional gl(1,1)")
    return idx


def split_even_gl11(alpha: UElement) -> tuple[PolyQ, PolyQ]:
    """Write an even alpha as r(x, y) + s(x, y)*u*v."""
    ix, iy, iu, iv = _gl11_indices(alpha.alg)
    r, s = {}, {}
    for m, c in alpha.terms.items():
        if m[iu] != m[iv]:
            raise ValueError("element is not even")
        (s if m[iu] else r)[(m[ix], m[iy])] = c
    return PolyQ(XY, r), PolyQ(XY, s)


def anticenter_formula_element(g: LieSuperalgebra, omega: PolyQ) -> UElement:
    """x*omega - (omega + tau(omega))*u*v as an element of U(gl(1,1))."""
    ix, iy, iu, iv = _gl11_indices(g)
    x = PolyQ.var("x", XY)
    r = x * omega
    s = -(omega + tau(omega))

    def embed(p: PolyQ, uv: int) -> dict:
        out = {}
        for (a, b), c in p.terms.items():
            m = [0] * 4
            m[ix], m[iy], m[iu], m[iv] = a, b, uv, uv
            out[tuple(m)] = c
        return out

    return UElement(g, embed(r, 0)) + UElement(g, embed(s, 1))


@dataclass
class MembershipResult:
    member: bool
    omega: PolyQ | None
    residual: PolyQ  # r + tau(r) + x*s

    def __str__(self) -> str:
        if self.member:
            return f"member, omega = {self.omega}"
        return f"not a member: r + tau(r) + x*s = {self.residual}"


def anticenter_formula_member(alpha: UElement) -> MembershipResult:
    """Decide alpha in A(gl(1,1)) by the criterion r + tau(r) = -x*s; return omega when it holds."""
    if not alpha.parities() <= {EVEN}:
        raise ValueError("element is not even")
    r, s = split_even_gl11(alpha)
    x = PolyQ.var("x", XY)
    residual = r + tau(r) + x * s
    if residual:
        return MembershipResult(False, None, residual)
    # r = x*omega: every term of r carries x
    if any(a == 0 for (a, _b) in r.terms):
        return MembershipResult(False, None, residual)
    omega = PolyQ(XY, {(a - 1, b): c for (a, b), c in r.terms.items()})
    assert s == -(omega + tau(omega))
    return MembershipResult(True, omega, residual)


def formula_span(g: LieSuperalgebra, d: int) -> list[UElement]:
    """Images of the monomials omega with deg(omega) <= d - 2 (their images have degree deg + 2)."""
    out = []
    for total in range(d - 1):
        for a in range(total, -1, -1):
            out.append(anticenter_formula_element(g, PolyQ(XY, {(a, total - a): 1})))
    return out


# -- structural checks ----------------------------------------------------------------------

def _span_rref(g: LieSuperalgebra, d: int, elems: Sequence[Element], h: bool = False) -> list:
    coords = _Coords(g, d, h=h)
    return rref([coords.to_vector(e) for e in elems], len(coords.columns))


def same_subspace(g: LieSuperalgebra, d: int, a: Sequence[Element], b: Sequence[Element], h: bool = False) -> bool:
    coords = _Coords(g, d, h=h)
    n = len(coords.columns)
    return same_span([coords.to_vector(e) for e in a], [coords.to_vector(e) for e in b], n)


def check_ag_lemma(g: LieSuperalgebra, d: int) -> list[Check]:
    """Anticenter properties at truncation d.

    * odd parts of anticenter and center coincide;
    * even anticenter elements commute with g0 and anticommute with g1;
    * products of even center and anticenter elements stay in the anticenter;
    * products of two even anticenter elements lie in the center (in F_2d);
    * the odd anticenter part vanishes when dim g1 is even.
    """
    A = anticenter_basis(g, d)
    Z = center_basis(g, d)
    checks = []
    a_odd, z_odd = A.part(ODD), Z.part(ODD)
    checks.append(
        Check(
            f"odd anticenter = odd center (d={d})",
            same_subspace(g, d, a_odd, z_odd),
            f"dims {len(a_odd)} vs {len(z_odd)}",
        )
    )
    a_even = A.part(EVEN)
    gens = UElement.gens(g)
    ok = all(
        (a * b - b * a * (-1) ** g.parities[i]).is_zero() for a in a_even for i, b in enumerate(gens)
    )
    checks.append(Check(f"even anticenter commutes with g0, anticommutes with g1 (d={d})", ok))
    ok = all(
        all(ad_twist(b, z * a).is_zero() for b in gens) for z in Z.part(EVEN) for a in A.elements
    )
    checks.append(Check(f"anticenter is a module over the even center (d={d})", ok))
    prods = [a * b for i, a in enumerate(a_even) for b in a_even[i:]]
    if prods:
        big = center_basis(g, 2 * d)
        coords = _Coords(g, 2 * d)
        span = [coords.to_vector(z) for z in big.elements]
        n = len(coords.columns)
        ok = all(commutes_with_generators(p) for p in prods) and all(
            same_span(span, span + [coords.to_vector(p)], n) for p in prods
        )
    else:
        ok = True
    checks.append(Check(f"products of even anticenter elements are central (d={d})", ok, f"{len(prods)} products"))
    if len(g.odd) % 2 == 0:
        checks.append(Check(f"odd anticenter vanishes for even dim g1 (d={d})", not a_odd, f"dim {len(a_odd)}"))
    return checks


@dataclass
class DecompositionReport:
    degree: int
    hcenter_dim: int
    center_even_dim: int
    anticenter_even_dim: int
    equal: bool
    hcenter_odd_dim: int

    @property
    def ok(self) -> bool:
        return self.equal and self.hcenter_odd_dim == 0

    def __str__(self) -> str:
        return (
            f"d={self.degree}: dim Z(H) = {self.hcenter_dim}, dim Z_0 = {self.center_even_dim}, "
            f"dim A_0 = {self.anticenter_even_dim}, equal = {self.equal}, odd part = {self.hcenter_odd_dim}"
        )


def check_hcenter_decomposition(g: LieSuperalgebra, d: int) -> DecompositionReport:
    """Compare the center of H(g) with Z_0 + A_0*t as subspaces of F_d H(g)."""
    H = hcenter_basis(g, d)
    Z0 = center_basis(g, d).part(EVEN)
    A0 = anticenter_basis(g, d).part(EVEN)
    t = HElement.t(g)
    rhs = [HElement(z) for z in Z0] + [HElement(a) * t for a in A0]
    equal = same_subspace(g, d, H.elements, rhs, h=True)
    odd = [e for e in H.elements if not h_graded_component(e, ODD).is_zero()]
    return DecompositionReport(d, H.dimension, len(Z0), len(A0), equal, len(odd))
