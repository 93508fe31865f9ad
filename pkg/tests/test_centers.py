from fractions import Fraction

import pytest
from hypothesis import given

from barymetric import (
    A,
    B,
    C,
    BaryPoint,
    InfiniteMisuse,
    ZeroVector,
    bracket,
    center_set,
    centroid,
    circumcenter,
    dist2,
    excenter,
    foot_of_perpendicular,
    incenter,
    midpoint,
    nine_point_center,
    orthocenter,
)
from barymetric.centers import circumradius2

from conftest import finite_points, shapes

F = Fraction
THIRD = BaryPoint(F(1, 3), F(1, 3), F(1, 3))


def test_centroid(right):
    G = centroid(right)
    assert G == THIRD
    assert 3 * G - A == 2 * midpoint(B, C)
    assert bracket(G, A, midpoint(B, C)) == 0


def test_right_triangle_centers(right):
    assert orthocenter(right) == A
    assert circumcenter(right) == BaryPoint(0, F(1, 2), F(1, 2))
    assert nine_point_center(right) == BaryPoint(F(1, 2), F(1, 4), F(1, 4))
    assert incenter(right) == BaryPoint(F(5, 12), F(1, 3), F(1, 4))
    assert excenter(right, "A") == BaryPoint(F(-5, 2), 2, F(3, 2))
    O = circumcenter(right)
    assert {dist2(right.K, O, V) for V in (A, B, C)} == {F(25, 4)}


def test_equilateral_centers_coincide(equilateral):
    cs = center_set(equilateral)
    assert cs.G == cs.H == cs.O == cs.N == cs.I == THIRD


def test_centers_match_cartesian(heronian):
    shape, cart = heronian
    assert cart.point(circumcenter(shape)) == cart.circumcenter()
    assert cart.point(orthocenter(shape)) == cart.orthocenter()
    assert cart.point(incenter(shape)) == cart.incenter()


@given(shapes())
def test_orthocenter_closed_form(shape):
    sA, sB, sC = shape.conway
    assert orthocenter(shape) == BaryPoint.from_homogeneous(sB * sC, sC * sA, sA * sB)


@given(shapes())
def test_circumcenter_closed_form(shape):
    a2, b2, c2 = shape.a ** 2, shape.b ** 2, shape.c ** 2
    assert circumcenter(shape) == BaryPoint.from_homogeneous(
        a2 * shape.sA, b2 * shape.sB, c2 * shape.sC
    )


@given(shapes())
def test_orthocenter_on_third_altitude(shape):
    H = orthocenter(shape)
    assert shape.K.form(A - B, H - C) == 0


@given(shapes(), finite_points())
def test_h_kernel(shape, X):
    H = orthocenter(shape)
    assert shape.K.form(H, X) == shape.K.form(H, H)


@given(shapes())
def test_oko_plus_hkh(shape):
    K, H, O = shape.K, orthocenter(shape), circumcenter(shape)
    assert K.form(O, O) + K.form(H, H) == circumradius2(shape)


@given(shapes())
def test_euler_relation(shape):
    assert 3 * centroid(shape) == 2 * circumcenter(shape) + orthocenter(shape)


@given(shapes(), finite_points())
def test_centroid_minimization(shape, X):
    K, G = shape.K, centroid(shape)
    lhs = sum(dist2(K, X, V) for V in (A, B, C))
    assert lhs == sum(dist2(K, G, V) for V in (A, B, C)) + 3 * dist2(K, G, X)


@given(shapes(), finite_points())
def test_altitude_concurrency_identity(shape, X):
    K = shape.K
    assert K.form(B - C, X - A) + K.form(C - A, X - B) + K.form(A - B, X - C) == 0


@given(shapes())
def test_nine_gkg(shape):
    G = centroid(shape)
    assert 9 * shape.K.form(G, G) == shape.sA + shape.sB + shape.sC


@given(shapes())
def test_incenter_area_ratios(shape):
    I = incenter(shape)
    assert all(x > 0 for x in I)
    ratios = (bracket(B, C, I), bracket(C, A, I), bracket(A, B, I))
    assert ratios[0] * shape.b == ratios[1] * shape.a
    assert ratios[1] * shape.c == ratios[2] * shape.b


def test_incircle_identities_on_right(right):
    I = incenter(right)
    assert right.K.form(I, I) == 2
    assert right.K.form(3 * centroid(right), I) == 7


@given(shapes())
def test_excenter_identities(shape):
    cs = center_set(shape)
    for X, rx2, Rrx in ((cs.Ia, cs.ra2, cs.Rra), (cs.Ib, cs.rb2, cs.Rrb), (cs.Ic, cs.rc2, cs.Rrc)):
        assert shape.K.form(X, X) == 2 * rx2
        assert shape.K.form(3 * cs.G, X) == -2 * Rrx + 2 * rx2


def test_midpoint():
    assert midpoint(A, B) == BaryPoint(F(1, 2), F(1, 2), 0)
    assert midpoint(THIRD, THIRD) == THIRD
    with pytest.raises(InfiniteMisuse):
        midpoint(A, B - A)


@given(shapes())
def test_midpoint_distance(shape):
    assert dist2(shape.K, midpoint(B, C), B) == shape.a ** 2 / 4


def test_foot_examples(right):
    assert foot_of_perpendicular(right, A, B, C) == BaryPoint(0, F(16, 25), F(9, 25))
    M = midpoint(B, C)
    assert foot_of_perpendicular(right, M, B, C) == M
    with pytest.raises(ZeroVector):
        foot_of_perpendicular(right, A, B, B)


def test_foot_matches_cartesian(heronian):
    shape, cart = heronian
    X = foot_of_perpendicular(shape, A, B, C)
    ax, ay = cart.A
    assert cart.point(X) == (ax, 0)  # BC lies on the x-axis


@given(shapes(), finite_points(), finite_points(), finite_points())
def test_foot_properties(shape, P, Q, R):
    if Q == R:
        return
    X = foot_of_perpendicular(shape, P, Q, R)
    assert shape.K.form(X - P, R - Q) == 0
    assert bracket(X, Q, R) == 0


@given(shapes())
def test_foot_of_h_on_bc(shape):
    H, G = orthocenter(shape), centroid(shape)
    Ha = foot_of_perpendicular(shape, H, B, C)
    K = shape.K
    assert K.form(Ha, Ha) == K.form(Ha, B) == K.form(Ha, C)
    assert K.form(Ha, Ha) == F(3, 2) * K.form(G, Ha)


def test_nine_point_center_to_foot_on_isosceles():
    from barymetric import TriangleShape

    shape = TriangleShape(6, 5, 5)
    N = nine_point_center(shape)
    assert dist2(shape.K, N, foot_of_perpendicular(shape, A, B, C)) == circumradius2(shape) / 4
    assert dist2(shape.K, N, midpoint(B, C)) == circumradius2(shape) / 4
