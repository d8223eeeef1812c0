"""Geometry kernel: constructions, incidence predicates, circles, cross ratios."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from butterfly import (
    Circle,
    CoincidentCircles,
    CoincidentLines,
    CoincidentPoints,
    CollinearPoints,
    DegenerateNewtonLine,
    DivisionByZero,
    Line,
    NotCollinear,
    ParallelLines,
    Point,
    RationalFunction,
    are_coaxial,
    are_concyclic,
    circle_on_diameter,
    circumcenter,
    circumcircle,
    cross_ratio,
    harmonic,
    intersect_lines,
    is_collinear,
    is_midpoint,
    is_on_circle,
    is_on_line,
    is_parallel,
    is_perpendicular,
    line_through,
    midpoint,
    newton_line,
    on_unit_circle,
    parallelogram_fourth,
    pencil_cross_ratio,
    perp_bisector,
    perp_through,
    point_on,
)


def P(x, y):
    return Point(Fraction(x), Fraction(y))


coords = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.builds(Point, coords, coords)


# -- primitive types ---------------------------------------------------------

def test_point_equality_and_immutability():
    assert P(1, 2) == Point(Fraction(2, 2), Fraction(4, 2))
    assert P(1, 2) != P(1, 3)
    assert tuple(P(3, 4)) == (Fraction(3), Fraction(4))
    with pytest.raises(AttributeError):
        P(0, 0).x = 1
    with pytest.raises(TypeError):
        hash(P(0, 0))


def test_line_projective_equality():
    assert Line(1, 1, -2) == Line(2, 2, -4)
    assert Line(1, 0, 0) != Line(1, 0, 1)
    assert Line(Fraction(1), Fraction(-1), 0) == Line(-3, 3, 0)
    with pytest.raises(ValueError):
        Line(0, 0, 5)


def test_line_symbolic_coefficients_are_cleared():
    a, b, c, d, k = RationalFunction.variables()
    line = Line(a / k, 1 / k, b)
    # cleared to polynomials: no denominators survive
    for coeff in (line.u, line.v, line.w):
        assert coeff.den == 1
    assert line == Line(a, RationalFunction.constant(1), b * k)


def test_circle_monic_structural_equality():
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    assert unit == Circle(0, Fraction(0), -1)
    assert unit.center() == P(0, 0)
    assert unit.radius_squared() == 1
    # imaginary-radius members are legal objects (needed for pencil algebra)
    ghost = Circle(Fraction(0), Fraction(0), Fraction(1))
    assert ghost.radius_squared() == -1


# -- constructions -----------------------------------------------------------

def test_midpoint():
    assert midpoint(P(0, 0), P(2, 4)) == P(1, 2)
    p = P(-7, 3)
    assert midpoint(p, p) == p


def test_line_through():
    assert line_through(P(0, 0), P(1, 1)) == Line(1, -1, 0)
    assert line_through(P(2, 0), P(1, 1)) == Line(1, 1, -2)
    with pytest.raises(CoincidentPoints):
        line_through(P(5, 5), P(5, 5))


def test_intersect_lines():
    x_axis = Line(0, 1, 0)
    y_axis = Line(1, 0, 0)
    assert intersect_lines(y_axis, x_axis) == P(0, 0)
    with pytest.raises(ParallelLines):
        intersect_lines(Line(1, 1, 0), Line(1, 1, -5))
    with pytest.raises(CoincidentLines):
        intersect_lines(Line(1, 1, -2), Line(2, 2, -4))


def test_parallel_lines_error_carries_both():
    l1, l2 = Line(1, 1, 0), Line(2, 2, -5)
    try:
        intersect_lines(l1, l2)
    except ParallelLines as exc:
        assert exc.lines == (l1, l2)
    else:
        pytest.fail("expected ParallelLines")


@given(points, points, points, points)
def test_intersection_lies_on_both_lines(p1, p2, p3, p4):
    try:
        l1, l2 = line_through(p1, p2), line_through(p3, p4)
        meet = intersect_lines(l1, l2)
    except (CoincidentPoints, ParallelLines, CoincidentLines):
        return
    assert is_on_line(meet, l1) and is_on_line(meet, l2)


def test_perp_bisector():
    assert perp_bisector(P(0, 0), P(2, 0)) == Line(1, 0, -1)
    assert perp_bisector(P(0, 0), P(0, 2)) == Line(0, 1, -1)
    with pytest.raises(CoincidentPoints):
        perp_bisector(P(1, 1), P(1, 1))


@given(points, points)
def test_perp_bisector_properties(p, q):
    if p == q:
        return
    bis = perp_bisector(p, q)
    assert is_perpendicular(bis, line_through(p, q))
    assert is_on_line(midpoint(p, q), bis)
    # any point on it is equidistant (squared) from p and q
    probe = second = None
    for t in (Fraction(0), Fraction(1), Fraction(-3, 2)):
        # param along the bisector direction (v, -u) from the midpoint
        m = midpoint(p, q)
        probe = Point(m.x + t * bis.v, m.y - t * bis.u)
        dp = (probe.x - p.x) ** 2 + (probe.y - p.y) ** 2
        dq = (probe.x - q.x) ** 2 + (probe.y - q.y) ** 2
        assert dp == dq


def test_perp_through():
    x_axis = Line(0, 1, 0)
    assert perp_through(P(0, 0), x_axis) == Line(1, 0, 0)
    slanted = Line(3, -2, 7)
    perp = perp_through(P(1, -4), slanted)
    assert is_perpendicular(perp, slanted)
    assert is_on_line(P(1, -4), perp)


def test_parallelogram_fourth():
    assert parallelogram_fourth(P(0, 0), P(1, 0), P(0, 1)) == P(1, 1)
    y = P(2, 3)
    z = P(-1, 5)
    assert parallelogram_fourth(y, y, z) == z


@given(points, points, points)
def test_parallelogram_sides_parallel(x, y, z):
    if x == y or x == z or y == z or is_collinear(x, y, z):
        return
    w = parallelogram_fourth(x, y, z)
    assert is_parallel(line_through(x, y), line_through(z, w))
    assert is_parallel(line_through(y, w), line_through(x, z))


def test_circumcenter():
    assert circumcenter(P(0, 0), P(2, 0), P(0, 2)) == P(1, 1)
    with pytest.raises(CollinearPoints):
        circumcenter(P(0, 0), P(1, 1), P(2, 2))


def test_circumcenter_frozen_instance():
    # distances to all of (-3,0), (-2,-2), (2,0) must be 25/4
    center = circumcenter(P(-3, 0), P(-2, -2), P(2, 0))
    assert center == P(Fraction(-1, 2), 0)
    for corner in (P(-3, 0), P(-2, -2), P(2, 0)):
        dist2 = (center.x - corner.x) ** 2 + (center.y - corner.y) ** 2
        assert dist2 == Fraction(25, 4)


@given(points, points, points)
def test_circumcenter_equidistant(p, q, r):
    try:
        center = circumcenter(p, q, r)
    except (CoincidentPoints, CollinearPoints):
        return
    d1 = (center.x - p.x) ** 2 + (center.y - p.y) ** 2
    d2 = (center.x - q.x) ** 2 + (center.y - q.y) ** 2
    d3 = (center.x - r.x) ** 2 + (center.y - r.y) ** 2
    assert d1 == d2 == d3


def test_newton_line():
    with pytest.raises(DegenerateNewtonLine):
        newton_line(P(0, 0), P(1, 0), P(1, 1), P(0, 1))
    line = newton_line(P(0, 0), P(4, 0), P(5, 3), P(1, 2))
    assert line == Line(1, 0, Fraction(-5, 2))
    assert is_on_line(P(Fraction(5, 2), Fraction(3, 2)), line)
    assert is_on_line(P(Fraction(5, 2), 1), line)


# -- circles -------------------------------------------------------------------

def test_circle_on_diameter():
    assert circle_on_diameter(P(-1, 0), P(1, 0)) == Circle(0, 0, -1)
    assert circle_on_diameter(P(0, 0), P(0, 2)) == Circle(0, -2, 0)
    with pytest.raises(CoincidentPoints):
        circle_on_diameter(P(1, 1), P(1, 1))


def test_power_on_diameter_circle_is_dot_product():
    circle = circle_on_diameter(P(1, 0), P(0, 1))
    assert power_of(P(0, 0), circle) == 0  # (1,0).(0,1) = 0: origin on circle
    assert is_on_circle(P(0, 0), circle)


def power_of(p, circle):
    from butterfly import power_of_point
    return power_of_point(p, circle)


@given(points, points, points)
def test_power_equals_dot_product(p, u, v):
    if u == v:
        return
    circle = circle_on_diameter(u, v)
    dot = (u.x - p.x) * (v.x - p.x) + (u.y - p.y) * (v.y - p.y)
    assert power_of(p, circle) == dot


def test_circumcircle():
    assert circumcircle(P(1, 0), P(0, 1), P(-1, 0)) == Circle(0, 0, -1)
    assert circumcircle(P(0, 0), P(2, 0), P(0, 2)) == Circle(-2, -2, 0)
    with pytest.raises(CollinearPoints):
        circumcircle(P(0, 0), P(1, 0), P(2, 0))
    with pytest.raises(CoincidentPoints):
        circumcircle(P(0, 0), P(0, 0), P(1, 1))


@given(points, points, points)
def test_circumcircle_passes_through_inputs(p, q, r):
    try:
        circle = circumcircle(p, q, r)
    except (CoincidentPoints, CollinearPoints):
        return
    assert is_on_circle(p, circle)
    assert is_on_circle(q, circle)
    assert is_on_circle(r, circle)


def test_power_of_point_basics():
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    assert power_of(P(0, 0), unit) == -1
    assert power_of(P(1, 0), unit) == 0
    assert power_of(P(2, 0), unit) == 3


def test_second_intersection():
    from butterfly import second_intersection
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    slope_one = line_through(P(1, 0), P(0, -1))
    assert second_intersection(unit, slope_one, P(1, 0)) == P(0, -1)
    tangent = Line(1, 0, -1)  # x = 1, tangent at (1, 0)
    assert second_intersection(unit, tangent, P(1, 0)) == P(1, 0)


def test_second_intersection_frozen_chord():
    from butterfly import second_intersection
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    start = P(Fraction(3, 5), Fraction(4, 5))
    chord = line_through(start, P(0, Fraction(1, 2)))
    other = second_intersection(unit, chord, start)
    assert other != start
    assert is_on_circle(other, unit)
    assert is_on_line(other, chord)


def test_second_intersection_preconditions():
    from butterfly import PointNotOnCircle, PointNotOnLine, second_intersection
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    x_axis = Line(0, 1, 0)
    with pytest.raises(PointNotOnLine):
        second_intersection(unit, x_axis, P(1, 1))
    with pytest.raises(PointNotOnCircle):
        second_intersection(unit, x_axis, P(2, 0))


def test_on_unit_circle():
    assert on_unit_circle(Fraction(0)) == P(1, 0)
    assert on_unit_circle(Fraction(1)) == P(0, 1)
    assert on_unit_circle(Fraction(-1)) == P(0, -1)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20))
def test_half_angle_point_is_on_circle(t):
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    assert is_on_circle(on_unit_circle(t), unit)


def test_are_concyclic():
    assert are_concyclic(P(1, 0), P(0, 1), P(-1, 0), P(0, -1))
    assert not are_concyclic(P(1, 0), P(0, 1), P(-1, 0), P(0, -2))


def test_are_coaxial_frozen_pencil():
    c1 = Circle(Fraction(0), Fraction(0), Fraction(-1))   # x^2+y^2-1
    c2 = Circle(Fraction(-2), Fraction(0), Fraction(0))   # x^2+y^2-2x
    c3 = Circle(Fraction(-4), Fraction(0), Fraction(1))   # x^2+y^2-4x+1
    # independent oracle: solve lam+mu = 1 with lam*c1 + mu*c2 = c3 from the
    # d-component (-2*mu = -4 -> mu = 2, lam = -1), then verify e and f
    lam, mu = Fraction(-1), Fraction(2)
    assert lam + mu == 1
    assert lam * c1.d + mu * c2.d == c3.d
    assert lam * c1.e + mu * c2.e == c3.e
    assert lam * c1.f + mu * c2.f == c3.f
    assert are_coaxial(c1, c2, c3)


def test_are_coaxial_rejects_and_refutes():
    c1 = Circle(Fraction(0), Fraction(0), Fraction(-1))
    c2 = Circle(Fraction(-2), Fraction(0), Fraction(0))
    off_pencil = Circle(Fraction(-4), Fraction(1), Fraction(1))
    assert not are_coaxial(c1, c2, off_pencil)
    with pytest.raises(CoincidentCircles):
        are_coaxial(c1, Circle(0, Fraction(0), -1), c2)


def test_concentric_circles_form_degenerate_pencil():
    c1 = Circle(Fraction(0), Fraction(0), Fraction(-1))
    c2 = Circle(Fraction(0), Fraction(0), Fraction(-4))
    c3 = Circle(Fraction(0), Fraction(0), Fraction(-9))
    assert are_coaxial(c1, c2, c3)


# -- predicates ----------------------------------------------------------------

def test_relation_predicates():
    assert is_midpoint(P(0, 0), P(4, -2), P(-4, 2))
    assert not is_midpoint(P(1, 0), P(4, -2), P(-4, 2))
    assert is_perpendicular(Line(1, 0, 0), Line(0, 1, 0))
    assert is_parallel(Line(1, 1, 0), Line(1, 1, -5))
    assert is_collinear(P(0, 0), P(1, 2), P(2, 4))
    assert not is_collinear(P(0, 0), P(1, 2), P(2, 5))


def test_point_on_dispatch():
    assert point_on(P(1, 0), Circle(Fraction(0), Fraction(0), Fraction(-1)))
    assert point_on(P(2, 2), Line(1, -1, 0))
    with pytest.raises(TypeError):
        point_on(P(0, 0), P(1, 1))


# -- cross ratios ----------------------------------------------------------------

def test_cross_ratio_harmonic_quadruple():
    pts = [P(t, 0) for t in (0, 1, 2, Fraction(2, 3))]
    assert cross_ratio(*pts) == -1
    # swapping the first pair preserves harmonicity
    assert cross_ratio(pts[1], pts[0], pts[2], pts[3]) == -1
    assert harmonic(*pts)


def test_cross_ratio_vertical_line():
    pts = [P(5, t) for t in (0, 1, 2, Fraction(2, 3))]
    assert cross_ratio(*pts) == -1


def test_cross_ratio_errors():
    with pytest.raises(NotCollinear):
        cross_ratio(P(0, 0), P(1, 0), P(2, 0), P(1, 1))
    with pytest.raises(CoincidentPoints):
        cross_ratio(P(1, 1), P(1, 1), P(1, 1), P(1, 1))
    with pytest.raises(DivisionByZero):
        cross_ratio(P(0, 0), P(1, 0), P(1, 0), P(Fraction(2, 3), 0))


@given(st.permutations(range(4)), st.fractions(min_value=-5, max_value=5, max_denominator=6),
       st.fractions(min_value=-5, max_value=5, max_denominator=6))
def test_cross_ratio_affine_invariance(perm, scale, shift):
    if scale == 0:
        return
    ts = [Fraction(0), Fraction(1), Fraction(3), Fraction(-2)]
    ts = [ts[i] for i in perm]
    before = cross_ratio(*(P(t, 0) for t in ts))
    # reparametrize the line by an affine map and tilt it off the axis
    after = cross_ratio(*(P(scale * t + shift, 2 * (scale * t + shift)) for t in ts))
    assert before == after


def test_pencil_cross_ratio_matches_transversal():
    vertex = P(0, 5)
    pts = [P(t, 0) for t in (0, 1, 2, Fraction(2, 3))]
    assert pencil_cross_ratio(vertex, *pts) == cross_ratio(*pts)
    # a different transversal through the same pencil gives the same value
    other = [intersect_lines(line_through(vertex, p), Line(0, 1, -1)) for p in pts]
    assert cross_ratio(*other) == -1
