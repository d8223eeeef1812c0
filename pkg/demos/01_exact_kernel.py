"""Walk one exact instance of the first generalized butterfly construction.

Every coordinate below is a `fractions.Fraction`, so each claim at the end
is decided by integer arithmetic.  There is no epsilon anywhere: a midpoint
either is the midpoint or is not.
"""

from fractions import Fraction

from butterfly import (
    DegenerateConfig,
    Point,
    circumcenter,
    cross_ratio,
    harmonic,
    intersect_lines,
    is_midpoint,
    line_through,
    midpoint,
    perp_through,
)


def show(name, p):
    print(f"  {name} = ({p.x}, {p.y})")


# The diagonal gauge: P at the origin, the diagonal AC on the x-axis, and
# the other diagonal BD along y = k*x.  Here a=2, b=1, c=-3, d=-2, k=1.
P = Point(Fraction(0), Fraction(0))
A = Point(Fraction(2), Fraction(0))
B = Point(Fraction(1), Fraction(1))
C = Point(Fraction(-3), Fraction(0))
D = Point(Fraction(-2), Fraction(-2))

print("Quadrilateral ABCD with diagonals meeting at P:")
for name, pt in [("A", A), ("B", B), ("C", C), ("D", D), ("P", P)]:
    show(name, pt)

# Circumcenters of the four triangles cut off by the diagonals.
O_a = circumcenter(C, B, D)
O_b = circumcenter(D, C, A)
O_c = circumcenter(A, D, B)
O_d = circumcenter(B, A, C)
print("\nCircumcenters of triangles CBD, DCA, ADB, BAC:")
for name, pt in [("O_a", O_a), ("O_b", O_b), ("O_c", O_c), ("O_d", O_d)]:
    show(name, pt)

# The axis of the theorem: the perpendicular from P to the line joining
# the midpoints of O_a O_c and O_b O_d.
M = midpoint(O_a, O_c)
N = midpoint(O_b, O_d)
axis = perp_through(P, line_through(M, N))
Q = intersect_lines(axis, line_through(A, B))
R = intersect_lines(axis, line_through(C, D))
print("\nMidpoints of the center pairs and the axis intersections:")
for name, pt in [("M", M), ("N", N), ("Q", Q), ("R", R)]:
    show(name, pt)

print("\nP is the midpoint of QR:", is_midpoint(P, Q, R))

# A taste of the projective layer: the fourth harmonic of P with respect
# to A and C sits at x = 12, and the cross-ratio certifies it exactly.
H = Point(Fraction(12), Fraction(0))
print("cross_ratio(P, H, A, C) =", cross_ratio(P, H, A, C))
print("harmonic(P, H, A, C)   =", harmonic(P, H, A, C))

# Degeneracies raise typed errors instead of returning garbage.
try:
    intersect_lines(line_through(A, B), line_through(A, B))
except DegenerateConfig as exc:
    print(f"\nIntersecting a line with itself: {type(exc).__name__}: {exc}")
