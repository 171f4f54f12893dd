import random
from fractions import Fraction

import pytest

from superpbw.bosonize import HElement
from superpbw.pbw import UElement, monomials_upto
from superpbw.superlie import build_gl


def random_u(g, rng, max_deg=2, max_terms=4, parity=None):
    monos = monomials_upto(g, max_deg)
    if parity is not None:
        monos = [m for m in monos if sum(e for e, p in zip(m, g.parities) if p) % 2 == parity]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(monos)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return UElement(g, terms)


def random_h(g, rng, max_deg=2, max_terms=3):
    return HElement(random_u(g, rng, max_deg, max_terms), random_u(g, rng, max_deg, max_terms))


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture(scope="session")
def gl11():
    return build_gl(1, 1)


@pytest.fixture(scope="session")
def gl21():
    return build_gl(2, 1)
