import random

import pytest

from splitcurves.arith import NumberField, UPoly
from splitcurves.curves import (
    curve_is_reduced,
    irreducibility_sextic,
    shear_matrix,
    singular_locus_complete,
    verify_node,
)
from splitcurves.errors import TooManyNodes
from splitcurves.forms import (
    ProjPoint,
    compose_form,
    parse_form,
    point,
    transform_point,
)
from splitcurves.linalg import mat_det, mat_inv
from splitcurves.scalars import QQ

from conftest import PLANE


def test_node_versus_cusp():
    rep = verify_node(parse_form("xy", PLANE), point(0, 0, 1))
    assert rep.is_singular and rep.is_node
    assert rep.local_quadratic_discriminant != 0
    rep = verify_node(parse_form("y^2*z-x^3", PLANE), point(0, 0, 1))
    assert rep.is_singular and not rep.is_node
    rep = verify_node(parse_form("xy", PLANE), point(1, 1, 1))
    assert not rep.is_singular and not rep.is_node


def test_registry_rational_node(gamma6_prime):
    rep = verify_node(gamma6_prime, point(1, 1, 1))
    assert rep.is_node


def test_conjugate_orbit_node(gamma6, gamma6_orbit):
    rep = verify_node(gamma6, gamma6_orbit)
    assert rep.is_singular and rep.is_node


def test_node_verdict_projective_invariance(gamma6_prime):
    rng = random.Random(20260810)
    p = point(1, 1, 1)
    for _ in range(5):
        while True:
            m = [
                [QQ(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)
            ]
            if mat_det(m) != 0:
                break
        minv = mat_inv(m)
        moved_curve = compose_form(gamma6_prime, m)
        moved_point = transform_point(minv, p)
        assert verify_node(moved_curve, moved_point).is_node


def test_completeness_rational(gamma6_prime, gamma6_prime_nodes):
    assert singular_locus_complete(gamma6_prime, gamma6_prime_nodes)
    # a proper subset of the singular locus is rejected
    assert not singular_locus_complete(gamma6_prime, gamma6_prime_nodes[:5])
    # an extra smooth point is rejected (it is not even singular)
    assert not singular_locus_complete(
        gamma6_prime, gamma6_prime_nodes + [point(1, 0, 0)]
    )


def test_completeness_conjugate_orbit(gamma6, gamma6_orbit):
    assert singular_locus_complete(gamma6, [gamma6_orbit])
    assert not singular_locus_complete(gamma6, [])


def test_completeness_wrong_orbit(gamma6):
    field = NumberField(UPoly([-1, -1, 1]))
    b = field.gen()
    wrong = ProjPoint([b, field.one(), field.one()])
    assert not singular_locus_complete(gamma6, [wrong])


def test_completeness_empty_for_smooth_curve():
    from splitcurves.conics import delta2

    assert singular_locus_complete(delta2(), [])


def test_completeness_beyond_nodes():
    # the check certifies the singular locus as a set, whatever the
    # singularity types: cusps, tacnodes, ordinary multiple points
    cusp = parse_form("y^2*z - x^3", PLANE)
    assert singular_locus_complete(cusp, [point(0, 0, 1)])
    pair = parse_form("y^2*z^4 - x^6", PLANE)
    assert singular_locus_complete(pair, [point(0, 0, 1), point(0, 1, 0)])
    assert not singular_locus_complete(pair, [point(0, 0, 1)])
    four_lines = parse_form("x*y*(x-y)*(x+y)", PLANE)
    assert singular_locus_complete(four_lines, [point(0, 0, 1)])
    tacnodal = parse_form("(y*z-x^2)*(y*z+x^2)", PLANE)
    assert singular_locus_complete(tacnodal, [point(0, 0, 1), point(0, 1, 0)])


def test_completeness_implies_each_point_is_a_node(
    gamma6_prime, gamma6_prime_nodes
):
    assert singular_locus_complete(gamma6_prime, gamma6_prime_nodes)
    for p in gamma6_prime_nodes:
        assert verify_node(gamma6_prime, p).is_node


def test_registry_node_counts(gamma6_orbit, gamma6_prime_nodes, gamma7_prime_nodes):
    assert gamma6_orbit.orbit_size() == 6
    assert sum(p.orbit_size() for p in gamma6_prime_nodes) == 6
    assert sum(p.orbit_size() for p in gamma7_prime_nodes) == 7


def test_shear_sequence_deterministic_invertible():
    for idx in range(10):
        a = shear_matrix(idx)
        b = shear_matrix(idx)
        assert a == b and mat_det(a) != 0


def test_irreducibility(gamma6, gamma6_orbit, gamma6_prime, gamma6_prime_nodes,
                        gamma7_prime, gamma7_prime_nodes):
    assert irreducibility_sextic(gamma6_prime, gamma6_prime_nodes)
    assert irreducibility_sextic(gamma6, [gamma6_orbit])
    gamma7, _conic = gamma7_prime
    assert irreducibility_sextic(gamma7, gamma7_prime_nodes)


def test_irreducibility_five_collinear(gamma6):
    bad = [
        point(1, 0, 0),
        point(0, 1, 0),
        point(1, 1, 0),
        point(1, 2, 0),
        point(1, 3, 0),
        point(0, 0, 1),
    ]
    assert not irreducibility_sextic(gamma6, bad)


def test_irreducibility_node_count_cap(gamma6):
    pts = [point(1, k, k * k + 1) for k in range(8)]
    with pytest.raises(TooManyNodes):
        irreducibility_sextic(gamma6, pts)


def test_curve_is_reduced(gamma6):
    assert curve_is_reduced(gamma6)
    doubled = parse_form("(x^2+y*z)^2", PLANE)
    assert not curve_is_reduced(doubled)
