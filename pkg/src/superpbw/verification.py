"""The identity suite behind ``superpbw verify``.

Checks on the key algebra (gl(1,1) by default, or any table with generators
x, y, u, v) plus fixed checks on the builtin gl(m,n) family. Every check is
exact; a check that raises is reported as a failure with the exception text.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .bosonize import Check, central_witness_check, h_graded_component, sigma
from .centers import (
    anticenter_basis,
    anticenter_formula_member,
    center_basis,
    check_ag_lemma,
    check_hcenter_decomposition,
    formula_span,
    hcenter_basis,
    same_subspace,
)
from .exactq import PolyQ
from .expr import normal_form, render
from .pbw import UElement, ad, ad_twist, count_filtered, graded_component, growth_degree, straighten
from .superlie import (
    LieSuperalgebra,
    MatrixElement,
    abelian,
    build_gl,
    dg,
    is_pi,
    supertrace,
    validate,
)

GL11_TABLE = {
    ("u", "v"): "x",
    ("u", "u"): "0",
    ("v", "v"): "0",
    ("x", "u"): "0",
    ("x", "v"): "0",
    ("y", "u"): "u",
    ("y", "v"): "-v",
    ("x", "y"): "0",
}


def _guard(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        res = fn()
    except Exception as exc:  # reported, not raised
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(res, tuple):
        return Check(name, bool(res[0]), res[1])
    return Check(name, bool(res))


def _nf_equals(g: LieSuperalgebra, lhs: str, rhs: str, bosonized: bool = False) -> tuple[bool, str]:
    a = normal_form(lhs, g, bosonized)
    b = normal_form(rhs, g, bosonized)
    return a == b, f"{lhs} -> {render(a)}, expected {render(b)}"


def key_algebra_checks(g: LieSuperalgebra) -> Iterator[Check]:
    from .superlie import bracket as lie_bracket, basis_vector

    def br(a: str, b: str) -> UElement:
        vec = lie_bracket(g, basis_vector(g, g.index(a)), basis_vector(g, g.index(b)))
        return UElement(g, {tuple(int(k == i) for k in range(g.dim)): c for i, c in enumerate(vec) if c})

    for (a, b), rhs in GL11_TABLE.items():
        yield _guard(f"bracket [{a},{b}] = {rhs}", lambda a=a, b=b, rhs=rhs: (br(a, b) == normal_form(rhs, g), f"got {br(a, b)}"))
    yield _guard("bracket table satisfies the superalgebra axioms", lambda: (validate(g).ok, str(validate(g))))
    yield _guard(
        "key algebra is gl(1,1) on x = e11 + e22, y = e11, u = e12, v = e21",
        lambda: g == build_gl(1, 1),
    )

    for word, rhs in (("vu", "x - u*v"), ("uy", "y*u - u"), ("uu", "0"), ("uvu", "x*u")):
        yield _guard(
            f"straighten {'*'.join(word)} = {rhs}",
            lambda word=word, rhs=rhs: (straighten(list(word), g) == normal_form(rhs, g), f"got {straighten(list(word), g)}"),
        )
    for n in "xyuv":
        yield _guard(f"x*{n} = {n}*x", lambda n=n: _nf_equals(g, f"x*{n}", f"{n}*x"))

    x, y, u, v = (UElement.gen(g, n) for n in "xyuv")
    w = lambda: -x + 2 * u * v
    yield _guard("ad(y)(u) = u", lambda: ad(y, u) == u)
    yield _guard("ad(u)(v) = x", lambda: ad(u, v) == x)
    yield _guard("twisted ad(u)(w) = 0", lambda: ad_twist(u, w()).is_zero())
    yield _guard("twisted ad(y)(w) = 0", lambda: ad_twist(y, w()).is_zero())
    yield _guard("w is even", lambda: graded_component(w(), 1).is_zero())
    yield _guard("sigma(u) = -u", lambda: sigma(u) == -u)
    yield _guard("sigma(x) = x", lambda: sigma(x) == x)
    yield _guard("t*u*t = -u", lambda: _nf_equals(g, "t*u*t", "-u", bosonized=True))
    yield _guard("t*t = 1", lambda: _nf_equals(g, "t*t", "1", bosonized=True))

    yield from central_witness_check(g)

    yield _guard("U and H are PI (even part abelian)", lambda: is_pi(g))
    yield _guard(
        "determinant of the odd bracket matrix is -x^2",
        lambda: (dg(g) == -PolyQ.var("x", [g.names[i] for i in g.even]) ** 2, f"got {dg(g)}"),
    )

    for src, omega in (("x - 2*u*v", "1"), ("x*y - (2*y - 1)*u*v", "y")):
        def member(src=src, omega=omega):
            res = anticenter_formula_member(normal_form(src, g))
            return res.member and str(res.omega) == omega, str(res)

        yield _guard(f"anticenter formula: {src} is a member with omega = {omega}", member)
    yield _guard(
        "anticenter formula: x is not a member",
        lambda: (not anticenter_formula_member(x).member, str(anticenter_formula_member(x))),
    )
    yield _guard(
        "x*y - (2*y - 1)*u*v lies in the anticenter (d=3)",
        lambda: same_subspace(
            g, 3, anticenter_basis(g, 3).elements, anticenter_basis(g, 3).elements + [normal_form("x*y - (2*y - 1)*u*v", g)]
        ),
    )
    for d in (2, 3, 4):
        def equiv(d=d):
            A = anticenter_basis(g, d).elements
            F = formula_span(g, d)
            return same_subspace(g, d, A, F), f"dims {len(A)} vs {len(F)}"

        yield _guard(f"anticenter = formula span in degree <= {d}", equiv)
    yield _guard("anticenter dimension is 0 in degree <= 1", lambda: anticenter_basis(g, 1).dimension == 0)
    yield _guard("anticenter dimension is 1 in degree <= 2", lambda: anticenter_basis(g, 2).dimension == 1)
    for d in range(5):
        def decomp(d=d):
            rep = check_hcenter_decomposition(g, d)
            return rep.ok, str(rep)

        yield _guard(f"center of H = Z_0 + A_0*t, odd part zero (d={d})", decomp)
    yield _guard(
        "center of H has dimension 5 = 4 + 1 at d=2",
        lambda: (
            (r := check_hcenter_decomposition(g, 2)).hcenter_dim == 5 and (r.center_even_dim, r.anticenter_even_dim) == (4, 1),
            str(r),
        ),
    )
    for d in (2, 3):
        for c in check_ag_lemma(g, d):
            yield c
    yield _guard("(x - 2*u*v)*(x - 2*u*v) = x^2", lambda: _nf_equals(g, "(x - 2*u*v)*(x - 2*u*v)", "x^2"))
    yield _guard("supertrace of the identity is 0", lambda: supertrace(_mat([[1, 0], [0, 1]])) == 0)
    yield _guard("supertrace of e11 is 1", lambda: supertrace(_mat([[1, 0], [0, 0]])) == 1)


def _mat(rows) -> MatrixElement:
    return MatrixElement(rows, 1, 1)


def family_checks() -> Iterator[Check]:
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        yield _guard(f"determinant of the odd bracket matrix of gl({m},{n}) is nonzero", lambda m=m, n=n: not dg(build_gl(m, n)).is_zero())
    yield _guard(
        "determinant vanishes for one odd generator with [b,b] = 0",
        lambda: (dg(abelian(1, 1)).is_zero(), str(dg(abelian(1, 1)))),
    )
    yield _guard("determinant is 1 for a purely even algebra", lambda: dg(abelian(2, 0)) == 1)
    g11, g21 = build_gl(1, 1), build_gl(2, 1)
    yield _guard("dim F_2 U(gl(1,1)) = 13", lambda: (count_filtered(g11, 2) == 13, str(count_filtered(g11, 2))))
    yield _guard("growth degree of U(gl(1,1)) is 2", lambda: (growth_degree(g11, 12).degree == 2, str(growth_degree(g11, 12))))
    yield _guard(
        "growth degree of H(gl(1,1)) is 2",
        lambda: (growth_degree(g11, 12, bosonized=True).degree == 2, str(growth_degree(g11, 12, bosonized=True))),
    )
    yield _guard("growth degree of U(gl(2,1)) is 5", lambda: (growth_degree(g21, 14).degree == 5, str(growth_degree(g21, 14))))
    yield _guard("gl(1,1) is PI", lambda: is_pi(g11))
    yield _guard("gl(2,1) is not PI", lambda: not is_pi(g21))
    yield _guard("abelian(2|2) is PI", lambda: is_pi(abelian(2, 2)))


def degree_reports(g: LieSuperalgebra, d: int) -> Iterator[Check]:
    for fn in (center_basis, anticenter_basis, hcenter_basis):
        def report(fn=fn):
            rep = fn(g, d)
            return True, str(rep)

        yield _guard(f"{fn.__name__.replace('_basis', '')} report (d={d})", report)
    yield _guard(
        f"center of H = Z_0 + A_0*t (d={d})",
        lambda: (check_hcenter_decomposition(g, d).ok, str(check_hcenter_decomposition(g, d))),
    )
    yield _guard(
        f"odd part of the center of H is zero (d={d})",
        lambda: all(h_graded_component(e, 1).is_zero() for e in hcenter_basis(g, d).elements),
    )


def run_suite(g: LieSuperalgebra | None = None, deg: int | None = None) -> list[Check]:
    g = g or build_gl(1, 1)
    checks = list(key_algebra_checks(g)) + list(family_checks())
    if deg is not None:
        checks += list(degree_reports(g, deg))
    return checks


def format_report(checks: list[Check], verbose_reports: bool = True) -> str:
    lines = []
    for c in checks:
        lines.append(c.line())
        if c.ok and verbose_reports and c.name.endswith(")") and " report " in c.name:
            lines += [f"      {ln}" for ln in c.detail.splitlines()]
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines)
