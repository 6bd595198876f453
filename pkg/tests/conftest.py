import random

import pytest

from splitcurves.arith import NumberField, UPoly
from splitcurves.forms import Form, ProjPoint, parse_form, point
from splitcurves.scalars import QQ

PLANE = ("x", "y", "z")
SPACE = ("x", "y", "z", "w")


def rng_for(name):
    """Deterministic per-test RNG."""
    return random.Random(0x5EED ^ hash(name) % (2**32))


def random_rat(rng, height=9):
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return QQ(num) / QQ(den)


def random_form(rng, degree, nvars=3, height=9, sparsity=0.8):
    from splitcurves.forms import monomial_basis

    variables = PLANE if nvars == 3 else SPACE
    terms = {}
    for expo in monomial_basis(nvars, degree):
        if rng.random() < sparsity:
            c = random_rat(rng, height)
            if c != 0:
                terms[expo] = c
    if not terms:
        expo = tuple([degree] + [0] * (nvars - 1))
        terms[expo] = QQ(1)
    return Form(variables, degree, terms)


@pytest.fixture(scope="session")
def delta2():
    from splitcurves.conics import delta2 as d2

    return d2()


@pytest.fixture(scope="session")
def gamma6():
    return parse_form("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2", PLANE)


@pytest.fixture(scope="session")
def gamma6_orbit():
    field = NumberField(UPoly([1, 3, 3, 1, 3, 3, 1]))
    a = field.gen()
    return ProjPoint([a, -(a**5) - 2 * a**4 - a**3 - 3 * a - 1, field.one()])


@pytest.fixture(scope="session")
def gamma6_prime():
    return parse_form(
        "(2*x^3-x^2*y+3*x^2*z-2*x*y^2-4*x*z^2+y^3+y*z^2)^2"
        "-z*(x-y)*(2*x-y)*(x+y-2*z)*(z^2-4*x*y)",
        PLANE,
    )


@pytest.fixture(scope="session")
def gamma6_prime_nodes():
    return [
        point(1, 1, 0),
        point(1, 2, 0),
        point(1, -1, 0),
        point(0, 0, 1),
        point(1, 1, 1),
        point(2, 4, 3),
    ]


@pytest.fixture(scope="session")
def gamma7_prime():
    c2 = parse_form("-61*x^2+20*x*y+4*x*z+4*y^2-4*y*z+z^2", PLANE)
    c3 = parse_form("-13*x^2*y+168*x^2*z-74*x*y*z-8*x*z^2-8*y^2*z+7*y*z^2", PLANE)
    c4 = parse_form(
        "x^2*y^2+16*x^2*y*z-112*x^2*z^2-4*x*y^2*z+64*x*y*z^2-y^2*z^2", PLANE
    )
    return c3 * c3 - (c2 * c4).scale(4), c2


@pytest.fixture(scope="session")
def gamma7_prime_nodes():
    return [
        point(0, 0, 1),
        point(0, 1, 0),
        point(1, 0, 0),
        point(1, 1, 1),
        point(1, -2, 1),
        point(-1, 6, 3),
        point(1, 2, -3),
    ]
