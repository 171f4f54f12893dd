from superpbw.bosonize import HElement, central_witness_check, h_graded_component, h_mul, sigma
from superpbw.expr import normal_form
from superpbw.pbw import UElement, count_filtered, monomials_upto
from superpbw.superlie import build_gl

from conftest import random_h, random_u


def test_sigma_examples(gl11):
    x, y, u, v = UElement.gens(gl11)
    assert sigma(u) == -u
    assert sigma(x) == x
    assert sigma(u * v) == u * v
    assert sigma(x + u) == x - u


def test_h_mul_examples(gl11):
    t = HElement.t(gl11)
    u = HElement.gen(gl11, "u")
    assert t * u * t == -u
    assert t * t == 1
    a, c = normal_form("y*u", gl11), normal_form("v + x", gl11)
    assert h_mul(HElement(a), HElement(c)) == HElement(a * c)


def test_t_conjugation_is_sigma(gl11, rng):
    t = HElement.t(gl11)
    for _ in range(40):
        a = random_u(gl11, rng, 3)
        assert t * HElement(a) * t == HElement(sigma(a))


def test_witness_product_is_zero(gl11):
    p = normal_form("(x - (-x + 2*u*v)*t)*(x + (-x + 2*u*v)*t)", gl11, bosonized=True)
    assert p.is_zero()


def test_h_graded_component(gl11):
    w = normal_form("-x + 2*u*v", gl11)
    wt = HElement(UElement.zero(gl11), w)
    assert h_graded_component(wt, 1).is_zero()
    e = normal_form("u + x*t", gl11, bosonized=True)
    assert h_graded_component(e, 1) == HElement.gen(gl11, "u")
    assert h_graded_component(e, 0) == normal_form("x*t", gl11, bosonized=True)


def test_components_decompose(gl11, rng):
    for _ in range(30):
        e = random_h(gl11, rng)
        assert h_graded_component(e, 0) + h_graded_component(e, 1) == e


def test_associativity_500(rng):
    for g in (build_gl(1, 1), build_gl(2, 1)):
        for _ in range(250):
            a, b, c = (random_h(g, rng, 2, 2) for _ in range(3))
            assert (a * b) * c == a * (b * c)


def test_sigma_automorphism(rng):
    for g in (build_gl(1, 1), build_gl(2, 1)):
        for _ in range(60):
            a, b = random_u(g, rng, 2, 3), random_u(g, rng, 2, 3)
            assert sigma(a * b) == sigma(a) * sigma(b)


def test_h_count_is_double(gl11):
    for n in range(5):
        monos = monomials_upto(gl11, n)
        h_basis = [HElement(UElement(gl11, {m: 1})) for m in monos] + [
            HElement(UElement.zero(gl11), UElement(gl11, {m: 1})) for m in monos
        ]
        assert len(set(h_basis)) == 2 * count_filtered(gl11, n)


def test_witness_check_all_pass(gl11):
    checks = central_witness_check(gl11)
    assert len(checks) == 15
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_witness_check_names_failure_on_corrupted_table():
    from superpbw.algebra_io import parse_algebra

    g = parse_algebra(
        "generator x even\ngenerator y even\ngenerator u odd\ngenerator v odd\n"
        "bracket [u,v] = 2*x\nbracket [y,u] = u\nbracket [y,v] = -v\n"
    )
    failed = {c.name for c in central_witness_check(g) if not c.ok}
    assert "(x - w*t)*(x + w*t) = 0" in failed
    assert "w^2 = x^2" in failed


def test_mixed_scalars(gl11):
    t = HElement.t(gl11)
    x = UElement.gen(gl11, "x")
    assert (2 * t + x) - x == t * 2
    assert x * t == HElement(x) * t
    assert (1 - t) * (1 + t) == 0
