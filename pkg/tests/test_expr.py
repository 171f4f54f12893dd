import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superpbw.bosonize import HElement
from superpbw.expr import (
    MAX_EXPONENT,
    Neg,
    Num,
    ParseError,
    Prod,
    Pow,
    Sum,
    Sym,
    normal_form,
    parse,
    render,
)
from superpbw.pbw import UElement
from superpbw.superlie import build_gl, build_sl

from conftest import random_h, random_u

NAMES = ("x", "y", "u", "v")


def test_parse_tree_for_w():
    tree = parse("-x + 2*u*v", NAMES)
    assert tree == Sum(Neg(Sym("x")), Prod(Prod(Num(2), Sym("u")), Sym("v")), 1)


def test_parse_product_with_bound_w():
    tree = parse("(x - w*t)*(x + w*t)", NAMES + ("w",), bosonized=True)
    assert isinstance(tree, Prod)
    assert tree.left == Sum(Sym("x"), Prod(Sym("w"), Sym("t")), -1)


def test_zero_power_is_one(gl11):
    assert parse("u^0", NAMES) == Pow(Sym("u"), 0)
    assert normal_form("u^0", gl11) == UElement.one(gl11)
    assert normal_form("y^3", gl11) == UElement.gen(gl11, "y") ** 3


def test_render_examples(gl11):
    assert render(normal_form("v*u", gl11)) == "x - u*v"
    assert render(UElement.zero(gl11)) == "0"
    assert render(normal_form("(x - 2*u*v)*t", gl11, bosonized=True)) == "x*t - 2*u*v*t"
    assert render(normal_form("t", gl11, bosonized=True)) == "t"
    assert render(normal_form("-1/2*t + 3", gl11, bosonized=True)) == "3 - 1/2*t"
    assert render(normal_form("1/2*y*y - 2/3", gl11)) == "-2/3 + 1/2*y^2"


def test_rationals(gl11):
    assert normal_form("3/6*x", gl11) == normal_form("x*1/2", gl11)
    assert normal_form("-(-x)", gl11) == normal_form("x", gl11)


@pytest.mark.parametrize(
    "src,pos",
    [
        ("x y", 2),
        ("2x", 1),
        ("x +", 3),
        ("(x", 2),
        ("x)", 1),
        ("z", 0),
        ("t", 0),
        ("x ^ y", 4),
        ("1/0", 2),
        ("x $ y", 2),
        ("(x+y)^2", 5),
        ("", 0),
    ],
)
def test_errors_carry_positions(src, pos):
    with pytest.raises(ParseError) as exc:
        parse(src, NAMES)
    assert exc.value.pos == pos
    assert f"position {pos}" in str(exc.value)


def test_exponent_and_depth_limits():
    with pytest.raises(ParseError):
        parse(f"x^{MAX_EXPONENT + 1}", NAMES)
    with pytest.raises(ParseError):
        parse("(" * 1000 + "x" + ")" * 1000, NAMES)
    with pytest.raises(ParseError):
        parse("-" * 1000 + "x", NAMES)


def test_t_only_in_bosonized_mode(gl11):
    assert normal_form("t*t", gl11, bosonized=True) == HElement.scalar(gl11, 1)
    with pytest.raises(ParseError):
        normal_form("t*t", gl11)


def test_round_trip_u(rng):
    for g in (build_gl(1, 1), build_gl(2, 1), build_sl(2, 1)):
        for _ in range(70):
            e = random_u(g, rng, max_deg=3, max_terms=5)
            assert normal_form(render(e), g) == e


def test_round_trip_h(gl11, rng):
    for _ in range(60):
        e = random_h(gl11, rng)
        assert normal_form(render(e), gl11, bosonized=True) == e


@settings(max_examples=400, deadline=None)
@given(st.binary(max_size=40))
def test_fuzz_bytes_never_crash(data):
    try:
        parse(data, NAMES, bosonized=True)
    except ParseError:
        pass


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="xyuvt0123456789+-*/^() ", max_size=30))
def test_fuzz_text_never_crash(src):
    g = build_gl(1, 1)
    try:
        normal_form(src, g, bosonized=True)
    except ParseError:
        pass
