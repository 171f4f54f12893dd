from fractions import Fraction

import pytest

from superpbw.algebra_io import AlgebraFileError, builtin, dump_algebra, parse_algebra
from superpbw.exactq import PolyQ
from superpbw.superlie import (
    EVEN,
    ODD,
    AlgebraError,
    LieSuperalgebra,
    MatrixElement,
    abelian,
    basis_vector,
    bracket,
    build_gl,
    build_sl,
    complete_brackets,
    dg,
    direct_sum,
    gl_matrices,
    is_pi,
    supercommutator,
    supertrace,
    validate,
)

GL11_TEXT = """
# the key example
generator x even
generator y even
generator u odd
generator v odd
bracket [u,v] = x
bracket [y,u] = u
bracket [y,v] = -v
"""


def vec(g, name):
    return basis_vector(g, g.index(name))


def test_gl11_table(gl11):
    assert gl11.names == ("x", "y", "u", "v")
    assert gl11.parities == (EVEN, EVEN, ODD, ODD)
    assert validate(gl11).ok
    assert bracket(gl11, vec(gl11, "u"), vec(gl11, "v")) == vec(gl11, "x")
    assert bracket(gl11, vec(gl11, "v"), vec(gl11, "u")) == vec(gl11, "x")
    assert bracket(gl11, vec(gl11, "y"), vec(gl11, "u")) == vec(gl11, "u")
    assert bracket(gl11, vec(gl11, "y"), vec(gl11, "v")) == [-c for c in vec(gl11, "v")]
    assert not any(bracket(gl11, vec(gl11, "x"), vec(gl11, "u")))
    assert not any(bracket(gl11, vec(gl11, "y"), vec(gl11, "y")))
    assert not any(bracket(gl11, vec(gl11, "u"), vec(gl11, "u")))


def test_file_reproduces_builtin(gl11):
    assert parse_algebra(GL11_TEXT) == gl11
    assert parse_algebra(dump_algebra(gl11)) == gl11


def test_antisymmetry_violation_named():
    g = LieSuperalgebra(["x", "y"], [EVEN, EVEN], {(0, 1): {0: 1}, (1, 0): {0: 1}})
    rep = validate(g)
    assert not rep.ok
    assert ("antisymmetry", ("x", "y")) in [(v.axiom, v.indices) for v in rep.violations]


def test_grading_and_jacobi_violations():
    g = LieSuperalgebra(["x", "u"], [EVEN, ODD], {(0, 0): {}, (1, 1): {1: 1}})
    assert "grading" in {v.axiom for v in validate(g).violations}
    # [a,b] = c, [a,c] = a, everything else zero: Jacobi fails on (a, b, c)
    g = LieSuperalgebra(
        ["a", "b", "c"], [EVEN] * 3, {(0, 1): {2: 1}, (1, 0): {2: -1}, (0, 2): {0: 1}, (2, 0): {0: -1}}
    )
    assert [v.axiom for v in validate(g).violations] == ["jacobi"]


def test_abelian_passes():
    assert validate(abelian(2, 3)).ok


@pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)])
def test_gl_valid(m, n):
    g = build_gl(m, n)
    assert g.dim == (m + n) ** 2
    assert len(g.odd) == 2 * m * n
    assert validate(g).ok


def test_dims():
    assert (build_gl(1, 1).dim, len(build_gl(1, 1).even)) == (4, 2)
    assert (build_gl(2, 1).dim, len(build_gl(2, 1).odd)) == (9, 4)
    assert build_sl(1, 1).names == ("x", "u", "v")
    assert build_sl(2, 1).dim == 8
    assert validate(build_sl(2, 1)).ok
    assert validate(build_sl(2, 2)).ok


def test_supertrace_examples():
    assert supertrace(MatrixElement([[1, 0], [0, 1]], 1, 1)) == 0
    assert supertrace(MatrixElement.unit(1, 1, 1, 1)) == 1
    assert supertrace(MatrixElement.unit(1, 2, 1, 1)) == 0
    assert supertrace(MatrixElement([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 2)]], 2, 1)) == Fraction(9, 2)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_sl_basis_supertrace_zero(m, n):
    from superpbw.superlie import sl_matrices

    _, mats = sl_matrices(m, n)
    assert all(supertrace(X) == 0 for X in mats)


def _random_homogeneous(rng, m, n):
    size = m + n
    parity = rng.randint(0, 1)
    rows = [[0] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            if ((r < m) != (c < m)) == bool(parity) and rng.random() < 0.6:
                rows[r][c] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return MatrixElement(rows, m, n)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 3), (2, 2), (3, 3)])
def test_supertrace_of_supercommutator_vanishes(m, n, rng):
    for _ in range(20):
        X, Y = _random_homogeneous(rng, m, n), _random_homogeneous(rng, m, n)
        assert supertrace(supercommutator(X, Y)) == 0


def test_gl_table_matches_matrices(rng):
    # structure constants reproduce supercommutators of the matrix units
    names, mats = gl_matrices(2, 1)
    g = build_gl(2, 1)
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = supercommutator(mats[i], mats[j])
            rhs = None
            for k, c in g.structure(i, j).items():
                term = mats[k].scale(c)
                rhs = term if rhs is None else rhs + term
            if rhs is None:
                assert not any(lhs.flat())
            else:
                assert lhs == rhs


def test_bracket_bilinear(rng):
    for g in (build_gl(1, 1), build_gl(2, 1), build_sl(2, 2)):
        for _ in range(20):
            a, b, c = ([Fraction(rng.randint(-3, 3)) for _ in range(g.dim)] for _ in range(3))
            al, be = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3))
            comb = [al * p + be * q for p, q in zip(a, b)]
            lhs = bracket(g, comb, c)
            ba, bb = bracket(g, a, c), bracket(g, b, c)
            assert lhs == [al * p + be * q for p, q in zip(ba, bb)]


def test_dg_examples(gl11):
    X = PolyQ.var("x", ("x", "y"))
    assert dg(gl11) == -(X**2)
    assert dg(abelian(1, 1)).is_zero()
    assert dg(abelian(2, 0)) == 1
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        assert not dg(build_gl(m, n)).is_zero()


def test_dg_rejects_invalid_table():
    g = LieSuperalgebra(["x", "y"], [EVEN, EVEN], {(0, 1): {0: 1}, (1, 0): {0: 1}})
    with pytest.raises(AlgebraError):
        dg(g)


def test_is_pi():
    assert is_pi(build_gl(1, 1))
    assert not is_pi(build_gl(2, 1))
    assert is_pi(abelian(3, 2))
    assert is_pi(direct_sum(build_gl(1, 1), abelian(0, 1)))


def test_completion_and_contradiction():
    names, par = ["x", "u", "v"], [EVEN, ODD, ODD]
    t = complete_brackets(names, par, [(1, 2, {0: 1})])
    assert t[(2, 1)] == {0: 1}
    with pytest.raises(AlgebraError):
        complete_brackets(names, par, [(1, 2, {0: 1}), (2, 1, {0: 2})])
    with pytest.raises(AlgebraError):
        complete_brackets(["x", "y"], [EVEN, EVEN], [(0, 0, {0: 1})])


@pytest.mark.parametrize(
    "text",
    [
        "generator x even\ngenerator x odd\n",
        "generator t even\n",
        "generator x weird\n",
        "generator x even\nbracket [x,z] = x\n",
        "generator x even\nbracket [x,x] = x\n",
        "generator u odd\nbracket [u,u] = u*u\n",
        "generator x even\nnonsense\n",
        "generator u odd\nbracket [u,u] = u\ngenerator v odd\n",
    ],
)
def test_bad_files(text):
    with pytest.raises(AlgebraFileError):
        parse_algebra(text)


def test_builtin_specs():
    assert builtin("gl(1,1)") == build_gl(1, 1)
    assert builtin(" sl( 2 , 1 ) ").dim == 8
    assert builtin("abelian(2|1)").names == ("a1", "a2", "b1")
    s = builtin("gl(1,1) (+) gl(1,1)")
    assert s.dim == 8 and validate(s).ok
    assert "x_1" in s.names and "x_2" in s.names
    with pytest.raises(AlgebraError):
        builtin("so(3)")


def test_reserved_and_duplicate_names():
    with pytest.raises(AlgebraError):
        LieSuperalgebra(["t"], [EVEN])
    with pytest.raises(AlgebraError):
        LieSuperalgebra(["a", "a"], [EVEN, ODD])
