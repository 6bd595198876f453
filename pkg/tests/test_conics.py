import pytest

from splitcurves.arith import binary_form_sqrt
from splitcurves.conics import (
    CONTACT,
    EVEN_CONTACT,
    NOT_CONTACT,
    SIMPLE_CONTACT,
    classify_conic,
    contact_profile,
    delta2,
    delta2_param,
    find_rational_point,
    normalize_conic,
    parametrize_conic,
    restrict_to_conic,
)
from splitcurves.errors import CommonComponent, PointNotOnConic
from splitcurves.forms import compose_form, form_to_str, parse_form, point
from splitcurves.linalg import mat_inv
from splitcurves.scalars import QQ

from conftest import PLANE, rng_for, random_form


def test_classification():
    assert classify_conic(delta2()) == "smooth"
    assert classify_conic(parse_form("xy", PLANE)) == "rank_two"
    assert classify_conic(parse_form("x^2", PLANE)) == "rank_one"


def test_parametrization_identity_and_base():
    for base in (point(1, 0, 0), point(0, 1, 0)):
        param = parametrize_conic(delta2(), base)
        assert restrict_to_conic(delta2(), param).is_zero()
        assert param.point_at(QQ(0), QQ(1)).eq_proj(base)


def test_point_not_on_conic():
    with pytest.raises(PointNotOnConic):
        parametrize_conic(delta2(), point(1, 1, 1))


def test_restriction_multiplicativity_and_degree():
    rng = rng_for("restrict-mult")
    param = delta2_param()
    for _ in range(100):
        f = random_form(rng, rng.randint(1, 3))
        g = random_form(rng, rng.randint(1, 3))
        rf = restrict_to_conic(f, param)
        rg = restrict_to_conic(g, param)
        assert restrict_to_conic(f * g, param) == rf * rg
        if not rf.is_zero():
            assert rf.degree == 2 * f.degree


def test_restrict_line_two_roots():
    # the line z vanishes at the parameters of (1:0:0) and (0:1:0)
    r = restrict_to_conic(parse_form("z", PLANE), delta2_param())
    assert r.degree == 2 and r.coeffs[0] == 0 and r.coeffs[2] == 0


def test_gamma6_restriction_is_content_times_square(gamma6):
    param = delta2_param()
    r = restrict_to_conic(gamma6, param)
    assert r.degree == 12
    root = binary_form_sqrt(r)
    assert root is not None and root * root == r
    content, factors = r.factor()
    assert all(mult == 2 for _f, mult in factors)
    # evaluation oracle: the restriction agrees with direct evaluation
    rng = rng_for("restriction-oracle")
    for _ in range(50):
        s0, t0 = QQ(rng.randint(-9, 9)), QQ(rng.randint(-9, 9))
        if s0 == 0 and t0 == 0:
            continue
        coords = [p.eval(s0, t0) for p in param.components()]
        assert r.eval(s0, t0) == gamma6.eval(coords)
    del content


def test_contact_profiles(gamma6, gamma7_prime, gamma7_prime_nodes):
    profile = contact_profile(gamma6, delta2(), delta2_param())
    assert profile.kind == SIMPLE_CONTACT and profile.tangent_count == 6

    gamma, conic = gamma7_prime
    profile = contact_profile(gamma, conic)
    assert profile.kind == SIMPLE_CONTACT and profile.tangent_count == 6

    # transversal intersections are not contact
    gamma_bad = parse_form(
        "(x+y+z)*(x-y+2*z)*(x^4+y^4+z^4+x*y*z*(x+3*y+7*z))", PLANE
    )
    profile = contact_profile(gamma_bad, delta2(), delta2_param())
    assert profile.kind == NOT_CONTACT
    del gamma7_prime_nodes


def test_contact_kind_ladder():
    # conic osculating to fourth order at (0:1:0): even but not simple
    quad = contact_profile(
        parse_form("z^2-4xy+x^2", PLANE), delta2(), delta2_param()
    )
    assert quad.kind == EVEN_CONTACT and quad.multiplicities == [4]
    # cubic restricting to s^3 t^3, smooth at both contact points:
    # contact with odd multiplicities, so neither even nor simple
    cubic = parse_form("1/2*x*y*z + (z^2-4*x*y)*(x+y)", PLANE)
    prof = contact_profile(cubic, delta2(), delta2_param())
    assert prof.kind == CONTACT and prof.multiplicities == [3, 3]


def test_contact_at_singular_point_rejected():
    # three lines: restriction s^3 t^3 but the tangency points are nodes
    cubic = parse_form("1/2*x*y*z", PLANE)
    prof = contact_profile(cubic, delta2(), delta2_param())
    assert prof.multiplicities == [3, 3]
    assert prof.kind == NOT_CONTACT


def test_common_component_detection(gamma6):
    with pytest.raises(CommonComponent):
        contact_profile(gamma6 * delta2(), delta2(), delta2_param())


def test_find_rational_point():
    c2 = parse_form("-61*x^2+20*x*y+4*x*z+4*y^2-4*y*z+z^2", PLANE)
    p = find_rational_point(c2)
    assert p is not None and c2.eval(list(p.coords)) == 0
    assert find_rational_point(parse_form("x^2+y^2+z^2", PLANE), height=25) is None


def test_normalize_conic_identity_cases():
    m = normalize_conic(delta2(), point(1, 0, 0))
    transformed = compose_form(delta2(), mat_inv(m))
    lam = transformed.terms[(0, 0, 2)]
    assert transformed == delta2().scale(lam)


def test_normalize_conic_nonsplit7():
    c2 = parse_form("-61*x^2+20*x*y+4*x*z+4*y^2-4*y*z+z^2", PLANE)
    base = find_rational_point(c2)
    m = normalize_conic(c2, base)
    transformed = compose_form(c2, mat_inv(m))
    lam = transformed.terms[(0, 0, 2)]
    assert lam != 0 and transformed == delta2().scale(lam)
    assert form_to_str(transformed.scale(1 / lam)) == form_to_str(delta2())


def test_simple_contact_tangent_count_is_curve_degree(gamma6):
    prof = contact_profile(gamma6, delta2(), delta2_param())
    assert prof.tangent_count == gamma6.degree


def test_parametrize_random_transformed_conics():
    # transformed copies of the normal conic always carry rational points;
    # the stereographic parametrization must satisfy its identities
    from splitcurves.linalg import mat_det
    import random

    rng = random.Random(0xC051C)
    done = 0
    while done < 25:
        m = [[QQ(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        if mat_det(m) == 0:
            continue
        done += 1
        q = compose_form(delta2(), m)
        assert classify_conic(q) == "smooth"
        base = find_rational_point(q)
        assert base is not None
        param = parametrize_conic(q, base)
        assert restrict_to_conic(q, param).is_zero()
        assert param.point_at(QQ(0), QQ(1)).eq_proj(base)
        # coefficient matrix invertible: the three quadratics independent
        from splitcurves.linalg import rank_naive

        assert rank_naive(param.coefficient_matrix()) == 3
        norm = normalize_conic(q, base)
        transformed = compose_form(q, mat_inv(norm))
        lam = None
        for expo, c in transformed.terms.items():
            lam = c / delta2().terms[expo]
            break
        assert transformed == delta2().scale(lam)
