"""Exact plane geometry over any field with Python arithmetic operators.

All constructions work uniformly for `fractions.Fraction` coordinates and for
`RationalFunction` coordinates; nothing here ever calls float math.  Zero
tests go through `is_zero`, which both scalar types support via `__bool__`.

Degenerate inputs raise subclasses of `DegenerateConfig` carrying enough
context to report *which* construction failed; callers running randomized
trials catch that family and count a skip.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CoincidentCircles,
    CoincidentLines,
    CoincidentPoints,
    CollinearPoints,
    DegenerateNewtonLine,
    NotCollinear,
    ParallelLines,
    PointNotOnCircle,
    PointNotOnLine,
)
from .ratfun import RationalFunction
from .scalar import field_div, is_zero


class Point:
    """A point of the affine plane with exact coordinates."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __iter__(self):
        yield self.x
        yield self.y

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return is_zero(self.x - other.x) and is_zero(self.y - other.y)

    __hash__ = None

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


class Line:
    """The line u*x + v*y + w = 0; (u, v) must not both vanish.

    Coefficients are only meaningful up to a common nonzero factor, and
    equality compares projectively.  When any coefficient is a rational
    function the triple is cleared to polynomials and normalized (common
    monomial and integer content removed, first nonzero coefficient made
    to have positive leading coefficient); this keeps repeated symbolic
    constructions from compounding denominators.  Plain rational triples
    are stored exactly as given.
    """

    __slots__ = ("u", "v", "w")

    def __init__(self, u, v, w):
        if isinstance(u, RationalFunction) or isinstance(v, RationalFunction) \
                or isinstance(w, RationalFunction):
            u, v, w = _clear_line(u, v, w)
        if is_zero(u) and is_zero(v):
            raise ValueError("line needs u or v nonzero")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return (is_zero(self.u * other.v - other.u * self.v)
                and is_zero(self.u * other.w - other.u * self.w)
                and is_zero(self.v * other.w - other.v * self.w))

    __hash__ = None

    def __repr__(self):
        return f"Line({self.u!r}, {self.v!r}, {self.w!r})"


class Circle:
    """The circle x^2 + y^2 + d*x + e*y + f = 0 (monic, so coefficients are unique)."""

    __slots__ = ("d", "e", "f")

    def __init__(self, d, e, f):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "f", f)

    def __setattr__(self, name, value):
        raise AttributeError("Circle is immutable")

    def center(self) -> Point:
        return Point(-self.d / 2, -self.e / 2)

    def radius_squared(self):
        return (self.d * self.d + self.e * self.e) / 4 - self.f

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        return (is_zero(self.d - other.d) and is_zero(self.e - other.e)
                and is_zero(self.f - other.f))

    __hash__ = None

    def __repr__(self):
        return f"Circle({self.d!r}, {self.e!r}, {self.f!r})"


def _as_ratfun(value):
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction.constant(value)


def _clear_line(u, v, w):
    """Rescale symbolic line coefficients to a normalized polynomial triple."""
    from math import gcd

    u, v, w = _as_ratfun(u), _as_ratfun(v), _as_ratfun(w)
    pu = u.num * v.den * w.den
    pv = v.num * u.den * w.den
    pw = w.num * u.den * v.den
    polys = [pu, pv, pw]
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        # invalid either way; let the (u, v) check in Line.__init__ report it
        return (RationalFunction(pu), RationalFunction(pv), RationalFunction(pw))
    mins = None
    for p in nonzero:
        m = p.min_exponents()
        mins = m if mins is None else tuple(min(x, y) for x, y in zip(mins, m))
    if any(mins):
        polys = [p if p.is_zero() else p.shift_down(mins) for p in polys]
        nonzero = [p for p in polys if not p.is_zero()]
    num_gcd, den_lcm = 0, 1
    for p in nonzero:
        cont = p.content()
        num_gcd = gcd(num_gcd, cont.numerator)
        den_lcm = den_lcm * cont.denominator // gcd(den_lcm, cont.denominator)
    scale = Fraction(num_gcd, den_lcm)
    if nonzero[0].leading_coefficient() < 0:
        scale = -scale
    polys = [p.scale(1 / scale) for p in polys]
    return tuple(RationalFunction(p) for p in polys)


# -- point and line constructions ------------------------------------------


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def line_through(p: Point, q: Point) -> Line:
    """The unique line through two distinct points."""
    dx = q.x - p.x
    dy = q.y - p.y
    if is_zero(dx) and is_zero(dy):
        raise CoincidentPoints("no unique line through coincident points")
    return Line(dy, -dx, dx * p.y - dy * p.x)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """Intersection point of two lines by Cramer's rule.

    Raises ParallelLines for distinct parallel lines and CoincidentLines
    when the two triples describe the same line.
    """
    det = l1.u * l2.v - l2.u * l1.v
    if is_zero(det):
        if l1 == l2:
            raise CoincidentLines("cannot intersect a line with itself")
        raise ParallelLines(l1=l1, l2=l2)
    x = (l1.v * l2.w - l2.v * l1.w) / det
    y = (l2.u * l1.w - l1.u * l2.w) / det
    return Point(x, y)


def perp_bisector(p: Point, q: Point) -> Line:
    """Locus of points equidistant from two distinct points."""
    if p == q:
        raise CoincidentPoints("perpendicular bisector needs distinct points")
    return Line(2 * (q.x - p.x), 2 * (q.y - p.y),
                p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y)


def perp_through(p: Point, line: Line) -> Line:
    """The perpendicular to `line` passing through `p` (p need not lie on it)."""
    return Line(-line.v, line.u, line.v * p.x - line.u * p.y)


def parallelogram_fourth(x: Point, y: Point, z: Point) -> Point:
    """Fourth vertex completing x, y, z to the parallelogram x-y-?-z.

    Pure coordinate arithmetic y + z - x; degenerate (collinear) inputs
    are deliberately allowed and simply give a flat parallelogram.
    """
    return Point(y.x + z.x - x.x, y.y + z.y - x.y)


def newton_line(a: Point, b: Point, c: Point, d: Point) -> Line:
    """Line joining the midpoints of the diagonals AC and BD of quadrilateral ABCD."""
    m1 = midpoint(a, c)
    m2 = midpoint(b, d)
    if m1 == m2:
        raise DegenerateNewtonLine("diagonal midpoints coincide")
    return line_through(m1, m2)


def is_collinear(p: Point, q: Point, r: Point) -> bool:
    return is_zero((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def is_midpoint(m: Point, p: Point, q: Point) -> bool:
    """Exact componentwise test 2m = p + q."""
    return is_zero(2 * m.x - p.x - q.x) and is_zero(2 * m.y - p.y - q.y)


def is_on_line(p: Point, line: Line) -> bool:
    return is_zero(line.u * p.x + line.v * p.y + line.w)


def is_parallel(l1: Line, l2: Line) -> bool:
    """Same direction; coincident lines count as parallel."""
    return is_zero(l1.u * l2.v - l2.u * l1.v)


def is_perpendicular(l1: Line, l2: Line) -> bool:
    return is_zero(l1.u * l2.u + l1.v * l2.v)


# -- circles ------------------------------------------------------------------


def circumcenter(p: Point, q: Point, r: Point) -> Point:
    """Center of the circle through three non-collinear points."""
    try:
        return intersect_lines(perp_bisector(p, q), perp_bisector(q, r))
    except (ParallelLines, CoincidentLines):
        raise CollinearPoints("no circumcenter for collinear points") from None


def _det3(r1, r2, r3):
    a, b, c = r1
    d, e, f = r2
    g, h, i = r3
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def circumcircle(p: Point, q: Point, r: Point) -> Circle:
    """Monic equation of the circle through three non-collinear points."""
    if p == q or q == r or p == r:
        raise CoincidentPoints("circumcircle needs three distinct points")
    det = _det3((p.x, p.y, 1), (q.x, q.y, 1), (r.x, r.y, 1))
    if is_zero(det):
        raise CollinearPoints("no circumcircle for collinear points")
    sp = -(p.x * p.x + p.y * p.y)
    sq = -(q.x * q.x + q.y * q.y)
    sr = -(r.x * r.x + r.y * r.y)
    d = _det3((sp, p.y, 1), (sq, q.y, 1), (sr, r.y, 1)) / det
    e = _det3((p.x, sp, 1), (q.x, sq, 1), (r.x, sr, 1)) / det
    f = _det3((p.x, p.y, sp), (q.x, q.y, sq), (r.x, r.y, sr)) / det
    return Circle(d, e, f)


def circle_on_diameter(p: Point, q: Point) -> Circle:
    """Circle having segment pq as a diameter (Thales circle)."""
    if p == q:
        raise CoincidentPoints("diameter endpoints must be distinct")
    return Circle(-(p.x + q.x), -(p.y + q.y), p.x * q.x + p.y * q.y)


def power_of_point(p: Point, circle: Circle):
    """Power of the point with respect to the circle, exact in the field."""
    return (p.x * p.x + p.y * p.y + circle.d * p.x + circle.e * p.y + circle.f)


def is_on_circle(p: Point, circle: Circle) -> bool:
    return is_zero(power_of_point(p, circle))


def point_on(p: Point, target) -> bool:
    """Exact incidence of a point with a line or circle."""
    if isinstance(target, Line):
        return is_on_line(p, target)
    if isinstance(target, Circle):
        return is_on_circle(p, target)
    raise TypeError(f"point_on expects a Line or Circle, got {type(target).__name__}")


def second_intersection(circle: Circle, line: Line, known: Point) -> Point:
    """Other intersection of a circle and line already meeting at `known`.

    Requires `known` to lie on both (checked exactly).  If the line is
    tangent at `known`, the second intersection coincides with it and
    `known` is returned.
    """
    if not is_on_line(known, line):
        raise PointNotOnLine("second_intersection: point is not on the line")
    if not is_on_circle(known, circle):
        raise PointNotOnCircle("second_intersection: point is not on the circle")
    u, v = line.u, line.v
    # parametrize as known + t*(v, -u); the quadratic in t has root 0 at `known`
    a_coeff = u * u + v * v
    b_coeff = 2 * known.x * v - 2 * known.y * u + circle.d * v - circle.e * u
    if is_zero(b_coeff):
        return known
    t = field_div(-b_coeff, a_coeff, "degenerate direction in second_intersection")
    return Point(known.x + t * v, known.y - t * u)


def on_unit_circle(t):
    """Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) of the unit circle.

    `t` is the half-angle parameter; every rational point except (-1, 0)
    arises this way.
    """
    t2 = t * t
    den = 1 + t2
    return Point((1 - t2) / den, 2 * t / den)


def are_concyclic(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Whether four points lie on one circle (first three must not be collinear)."""
    return is_on_circle(p4, circumcircle(p1, p2, p3))


def are_coaxial(c1: Circle, c2: Circle, c3: Circle) -> bool:
    """Whether three pairwise distinct circles belong to one pencil.

    Tested as rank <= 1 of the two coefficient-difference vectors, i.e.
    all three 2x2 minors vanish.  Distinct concentric circles do share a
    (degenerate) pencil and test true.
    """
    if c1 == c2 or c1 == c3 or c2 == c3:
        raise CoincidentCircles("coaxial test needs pairwise distinct circles")
    r1 = (c1.d - c2.d, c1.e - c2.e, c1.f - c2.f)
    r2 = (c1.d - c3.d, c1.e - c3.e, c1.f - c3.f)
    return (is_zero(r1[0] * r2[1] - r1[1] * r2[0])
            and is_zero(r1[0] * r2[2] - r1[2] * r2[0])
            and is_zero(r1[1] * r2[2] - r1[2] * r2[1]))


# -- cross ratios ----------------------------------------------------------------


def _line_parameter(line: Line, p: Point):
    # pick the coordinate that actually varies along the line
    return p.y if is_zero(line.v) else p.x


def cross_ratio(p1: Point, p2: Point, p3: Point, p4: Point):
    """Affine cross ratio (p1,p2; p3,p4) of four collinear points.

    Computed on the x-coordinate, or on y for a vertical line.  Raises
    NotCollinear when the points do not share a line, CoincidentPoints
    when no two of them are distinct, and DivisionByZero when the cross
    ratio degenerates to infinity.
    """
    points = (p1, p2, p3, p4)
    base = None
    for i in range(4):
        for j in range(i + 1, 4):
            if points[i] != points[j]:
                base = line_through(points[i], points[j])
                break
        if base is not None:
            break
    if base is None:
        raise CoincidentPoints("cross ratio of four coincident points")
    for p in points:
        if not is_on_line(p, base):
            raise NotCollinear("cross ratio needs collinear points")
    t1, t2, t3, t4 = (_line_parameter(base, p) for p in points)
    return field_div((t1 - t3) * (t2 - t4), (t1 - t4) * (t2 - t3),
                     "cross ratio is infinite")


def pencil_cross_ratio(vertex: Point, p1: Point, p2: Point, p3: Point, p4: Point):
    """Cross ratio of the four lines joining `vertex` to the given points.

    Uses signed areas s(p, q) = (p - vertex) x (q - vertex); the value is
    s(1,3)*s(2,4) / (s(1,4)*s(2,3)).  Equals the affine cross ratio of the
    four intersection points with any transversal line.
    """
    def s(p, q):
        return ((p.x - vertex.x) * (q.y - vertex.y)
                - (p.y - vertex.y) * (q.x - vertex.x))

    return field_div(s(p1, p3) * s(p2, p4), s(p1, p4) * s(p2, p3),
                     "pencil cross ratio is infinite or undefined")


def harmonic(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Whether (p1,p2; p3,p4) = -1 on their common line."""
    return cross_ratio(p1, p2, p3, p4) == -1
