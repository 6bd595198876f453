import pytest

from splitcurves.arith import (
    BinForm,
    NumberField,
    UPoly,
    binary_form_sqrt,
    upoly_factor,
    upoly_gcd,
    upoly_is_irreducible,
)
from splitcurves.errors import DegreeTooLarge, ReducibleMinimalPolynomial
from splitcurves.scalars import QQ

from conftest import rng_for, random_rat


def poly(*coeffs):
    return UPoly(list(coeffs))


# -- independent irreducibility oracle --------------------------------------
#
# For a monic integer polynomial, any monic factor has integer coefficients
# whose roots are among the polynomial's roots, so the Cauchy bound on the
# roots bounds every factor coefficient.  Exhaustive search over that box
# decides the existence of factors of degree 1..3, which settles degree <= 7.


def _cauchy_bound(p):
    return 1 + max(abs(int(c.numerator)) for c in p.coeffs[:-1])


def _divides(p, q):
    return (p % q).is_zero()


def oracle_has_small_factor(p):
    bound = _cauchy_bound(p)
    const = int(p.coeffs[0].numerator)
    divisors = [d for d in range(1, abs(const) + 1) if const % d == 0]
    for d in divisors:
        for s in (d, -d):
            if _divides(p, poly(-s, 1)):
                return True
    if p.degree() < 4:
        return False
    b2 = int(bound * 2)
    c_candidates = [s * d for d in divisors for s in (1, -1)]
    for b in range(-b2, b2 + 1):
        for c in c_candidates:
            if _divides(p, poly(c, b, 1)):
                return True
    if p.degree() < 6:
        return False
    c2 = int(3 * bound * bound)
    for b in range(-b2, b2 + 1):
        for c in range(-c2, c2 + 1):
            for d in c_candidates:
                if _divides(p, poly(d, c, b, 1)):
                    return True
    return False


def test_difference_of_squares():
    facs = upoly_factor(poly(-1, 0, 1))
    assert [(f.coeffs, m) for f, m in facs] == [
        ((QQ(-1), QQ(1)), 1),
        ((QQ(1), QQ(1)), 1),
    ]


def test_degree_six_minimal_polynomial_irreducible():
    p = poly(1, 3, 3, 1, 3, 3, 1)
    assert not oracle_has_small_factor(p)
    facs = upoly_factor(p)
    assert len(facs) == 1 and facs[0][1] == 1
    assert facs[0][0] == p


def test_golden_ratio_polynomial_irreducible():
    p = poly(-1, -1, 1)
    # rational-root test: candidates are +-1, neither is a root
    assert p.eval(QQ(1)) != 0 and p.eval(QQ(-1)) != 0
    assert upoly_is_irreducible(p)


def test_quartic_node_polynomial_irreducible():
    assert upoly_is_irreducible(poly(-1, 0, 2, 0, 4))


def test_factor_reconstruction_deterministic_random():
    rng = rng_for("factor-reconstruction")
    for _ in range(40):
        f = poly(1)
        for _k in range(rng.randint(1, 3)):
            deg = rng.randint(1, 3)
            coeffs = [random_rat(rng, 5) for _ in range(deg)] + [QQ(1)]
            cand = UPoly(coeffs)
            f = f * cand ** rng.randint(1, 2)
        f = f.scale(random_rat(rng, 5) or QQ(1))
        if f.degree() > 14 or f.is_zero():
            continue
        facs = upoly_factor(f)
        rebuilt = UPoly([f.lc()])
        for g, m in facs:
            rebuilt = rebuilt * g**m
        assert rebuilt == f
        for g, _m in facs:
            assert g.lc() == 1


def test_multiplicities():
    f = poly(-5, 1) ** 3 * poly(1, 0, 1)
    facs = dict((tuple(g.coeffs), m) for g, m in upoly_factor(f))
    assert facs[(QQ(-5), QQ(1))] == 3
    assert facs[(QQ(1), QQ(0), QQ(1))] == 1


def test_degree_bound_enforced():
    f = poly(1, 1) ** 25
    with pytest.raises(DegreeTooLarge):
        upoly_factor(f)
    assert upoly_factor(f, max_degree=25)


def test_gcd_and_divmod():
    a = poly(-1, 0, 1)
    b = poly(1, 1)
    assert upoly_gcd(a, b) == b
    q, r = a.divmod(b)
    assert q * b + r == a and r.is_zero()


# -- binary form square roots ------------------------------------------------


def test_sqrt_examples():
    assert binary_form_sqrt(BinForm(2, [1, 2, 1])) == BinForm(1, [1, 1])
    assert binary_form_sqrt(BinForm(4, [0, 0, 1, 0, 0])) == BinForm(2, [0, 1, 0])
    assert binary_form_sqrt(BinForm(2, [2, 0, 0])) is None
    assert binary_form_sqrt(BinForm(3, [1, 0, 0, 1])) is None


def test_sqrt_roundtrip_200_cases():
    rng = rng_for("binary-sqrt")
    hits = 0
    while hits < 200:
        deg = rng.randint(1, 6)
        coeffs = [random_rat(rng, 7) for _ in range(deg + 1)]
        g = BinForm(deg, coeffs)
        if g.is_zero():
            continue
        hits += 1
        root = binary_form_sqrt(g * g)
        assert root is not None and root in (g, -g)


# -- number fields -----------------------------------------------------------


def test_number_field_construction_checks_irreducibility():
    with pytest.raises(ReducibleMinimalPolynomial):
        NumberField(poly(-1, 0, 1))


def test_generator_satisfies_minimal_polynomial():
    mp = poly(1, 3, 3, 1, 3, 3, 1)
    field = NumberField(mp)
    a = field.gen()
    assert (mp.eval(a)).is_zero()


def test_field_arithmetic_properties():
    rng = rng_for("nf-arith")
    field = NumberField(poly(-1, 0, 2, 0, 4))

    def rand_elem():
        return field.elem([random_rat(rng, 5) for _ in range(field.degree)])

    for _ in range(200):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert (a * a.inv()) == field.one()


def test_rational_canonical_form():
    assert QQ(2, 4) == QQ(1, 2)
    assert str(QQ(2, 4)) == "1/2"
    assert QQ(-3, -6) == QQ(1, 2)
