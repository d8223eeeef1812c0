"""The verified results as executable configurations and checkers.

Seven results are covered: the chord form of the butterfly theorem, its
cyclic-quadrilateral form, the two generalizations to arbitrary
quadrilaterals (ids "thm1" and "thm2"), and three supporting lemmas.  Each
gets a randomized numeric checker over exact rationals; thm1, thm2, and
lemma3 additionally get symbolic proofs over Q(a, b, c, d, k), where every
construction step is compared against the independently keyed-in closed
forms in `closedforms` and the final midpoint / power-ratio identities are
decided exactly.

A checker is a total function from a configuration to a bool; degenerate
configurations raise a `DegenerateConfig` subclass, which the suite runner
counts as a skip.  All builders work unchanged over both scalar backends.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import closedforms
from .errors import DegenerateConfig, SymbolicMismatch
from .geom import (
    Circle,
    Line,
    Point,
    are_coaxial,
    circle_on_diameter,
    circumcenter,
    circumcircle,
    cross_ratio,
    intersect_lines,
    is_midpoint,
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
    power_of_point,
    second_intersection,
)
from .ratfun import RationalFunction
from .scalar import derive_rng, format_rational, sample_rational

_MAX_REDRAWS = 100000


# -- configurations -----------------------------------------------------------


@dataclass(frozen=True)
class GaugeConfig:
    """Quadrilateral in the diagonal gauge: P(0,0), A(a,0), B(b,kb), C(c,0), D(d,kd).

    The diagonal intersection sits at the origin by construction.  Proper
    configurations have all five scalars nonzero with a != c and b != d;
    the default sampler additionally places P strictly inside both
    diagonals (a*c < 0 and b*d < 0).
    """

    a: object
    b: object
    c: object
    d: object
    k: object

    @classmethod
    def symbolic(cls) -> "GaugeConfig":
        return cls(*RationalFunction.variables())

    def corners(self) -> tuple[Point, Point, Point, Point, Point]:
        zero = self.a * 0
        return (Point(zero, zero),
                Point(self.a, zero),
                Point(self.b, self.k * self.b),
                Point(self.c, zero),
                Point(self.d, self.k * self.d))

    def params(self) -> tuple[tuple[str, object], ...]:
        return (("a", self.a), ("b", self.b), ("c", self.c),
                ("d", self.d), ("k", self.k))

    def as_assignment(self) -> dict[str, Fraction]:
        return {name: value for name, value in self.params()}


# the two generalizations share the gauge, so their config types coincide
Thm1Config = GaugeConfig
Thm2Config = GaugeConfig


@dataclass(frozen=True)
class CyclicConfig:
    """Four tangent-half-angle parameters placing A, B, C, D on the unit circle."""

    t_a: object
    t_b: object
    t_c: object
    t_d: object

    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (on_unit_circle(self.t_a), on_unit_circle(self.t_b),
                on_unit_circle(self.t_c), on_unit_circle(self.t_d))

    def params(self) -> tuple[tuple[str, object], ...]:
        return (("t_a", self.t_a), ("t_b", self.t_b),
                ("t_c", self.t_c), ("t_d", self.t_d))


@dataclass(frozen=True)
class ChordButterflyConfig:
    """Chord endpoints A, B and free chord endpoints C, E on the unit circle.

    The two free chords are drawn through the midpoint M of AB; sampling
    keeps C and the constructed F on opposite sides of line AB, matching
    the classical statement.
    """

    t_a: object
    t_b: object
    t_c: object
    t_e: object

    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (on_unit_circle(self.t_a), on_unit_circle(self.t_b),
                on_unit_circle(self.t_c), on_unit_circle(self.t_e))

    def params(self) -> tuple[tuple[str, object], ...]:
        return (("t_a", self.t_a), ("t_b", self.t_b),
                ("t_c", self.t_c), ("t_e", self.t_e))


@dataclass(frozen=True)
class QuadConfig:
    """Four free vertices for the Newton-line lemma."""

    A: Point
    B: Point
    C: Point
    D: Point

    def params(self) -> tuple[tuple[str, object], ...]:
        return (("ax", self.A.x), ("ay", self.A.y), ("bx", self.B.x),
                ("by", self.B.y), ("cx", self.C.x), ("cy", self.C.y),
                ("dx", self.D.x), ("dy", self.D.y))


@dataclass(frozen=True)
class Lemma2Config:
    """Two quadrilaterals ABCD and PQRS with the six side/diagonal perpendicularities.

    Instances are generated from the circumcenter quadrilateral of a gauge
    quadrilateral (P, Q, R, S = O_c, O_d, O_a, O_b), which satisfies all six
    constraints exactly; `gauge` keeps the generating scalars for replay.
    """

    A: Point
    B: Point
    C: Point
    D: Point
    P: Point
    Q: Point
    R: Point
    S: Point
    gauge: GaugeConfig | None = None

    def params(self) -> tuple[tuple[str, object], ...]:
        if self.gauge is not None:
            return self.gauge.params()
        pairs = []
        for name in ("A", "B", "C", "D", "P", "Q", "R", "S"):
            pt = getattr(self, name)
            pairs.append((f"{name.lower()}x", pt.x))
            pairs.append((f"{name.lower()}y", pt.y))
        return tuple(pairs)


# -- builders (shared by numeric, symbolic, and bridge paths) -----------------


def build_thm1(cfg: GaugeConfig) -> dict[str, object]:
    """All intermediate objects of the first generalization, in construction order."""
    P, A, B, C, D = cfg.corners()
    O_a = circumcenter(C, B, D)  # bisectors of BC, BD
    O_b = circumcenter(D, C, A)  # bisectors of CD, CA
    O_c = circumcenter(A, D, B)  # bisectors of DA, DB
    O_d = circumcenter(B, A, C)  # bisectors of AB, AC
    M = midpoint(O_a, O_c)
    N = midpoint(O_b, O_d)
    line_MN = line_through(M, N)
    axis = perp_through(P, line_MN)
    line_AB = line_through(A, B)
    line_CD = line_through(C, D)
    Q = intersect_lines(axis, line_AB)
    R = intersect_lines(axis, line_CD)
    return {"P": P, "A": A, "B": B, "C": C, "D": D,
            "O_a": O_a, "O_b": O_b, "O_c": O_c, "O_d": O_d,
            "M": M, "N": N, "line_MN": line_MN, "axis": axis,
            "line_AB": line_AB, "line_CD": line_CD, "Q": Q, "R": R}


def build_thm2(cfg: GaugeConfig) -> dict[str, object]:
    """All intermediate objects of the second generalization."""
    P, A, B, C, D = cfg.corners()
    X = intersect_lines(perp_bisector(A, C), perp_bisector(B, D))
    Y = intersect_lines(perp_bisector(A, B), perp_bisector(C, D))
    Z = intersect_lines(perp_bisector(A, D), perp_bisector(B, C))
    W = parallelogram_fourth(X, Y, Z)
    line_PW = line_through(P, W)
    axis = perp_through(P, line_PW)
    line_AD = line_through(A, D)
    line_BC = line_through(B, C)
    Q = intersect_lines(axis, line_AD)
    R = intersect_lines(axis, line_BC)
    return {"P": P, "A": A, "B": B, "C": C, "D": D,
            "X": X, "Y": Y, "Z": Z, "W": W, "line_PW": line_PW, "axis": axis,
            "line_AD": line_AD, "line_BC": line_BC, "Q": Q, "R": R}


def build_lemma3(cfg: GaugeConfig) -> dict[str, object]:
    """Circumcenters, diagonal midpoints, and the three circles of the coaxiality lemma."""
    P, A, B, C, D = cfg.corners()
    O_a = circumcenter(C, B, D)
    O_b = circumcenter(D, C, A)
    O_c = circumcenter(A, D, B)
    O_d = circumcenter(B, A, C)
    M = midpoint(A, C)
    N = midpoint(B, D)
    circle_ac = circle_on_diameter(O_a, O_c)
    circle_bd = circle_on_diameter(O_b, O_d)
    circle_pmn = circumcircle(P, M, N)
    return {"P": P, "A": A, "B": B, "C": C, "D": D,
            "O_a": O_a, "O_b": O_b, "O_c": O_c, "O_d": O_d,
            "M": M, "N": N,
            "circle_ac": circle_ac, "circle_bd": circle_bd,
            "circle_pmn": circle_pmn}


def build_thm0(cfg: CyclicConfig) -> dict[str, object]:
    """Cyclic quadrilateral on the unit circle with the perpendicular at P to OP."""
    A, B, C, D = cfg.corners()
    P = intersect_lines(line_through(A, C), line_through(B, D))
    zero = cfg.t_a * 0
    O = Point(zero, zero)
    axis = perp_through(P, line_through(O, P))  # CoincidentPoints when P = O
    Q = intersect_lines(axis, line_through(A, B))
    R = intersect_lines(axis, line_through(C, D))
    return {"A": A, "B": B, "C": C, "D": D, "P": P, "O": O,
            "axis": axis, "Q": Q, "R": R}


def build_chord(cfg: ChordButterflyConfig) -> dict[str, object]:
    """Chord-form construction: both free chords drawn through the midpoint of AB."""
    A, B, C, E = cfg.corners()
    omega = circumcircle(A, B, C)
    M = midpoint(A, B)
    D = second_intersection(omega, line_through(C, M), C)
    F = second_intersection(omega, line_through(E, M), E)
    line_AB = line_through(A, B)
    G = intersect_lines(line_through(C, F), line_AB)
    H = intersect_lines(line_through(D, E), line_AB)
    return {"A": A, "B": B, "C": C, "E": E, "omega": omega, "M": M,
            "D": D, "F": F, "line_AB": line_AB, "G": G, "H": H}


def build_lemma2(gauge: GaugeConfig) -> Lemma2Config:
    """Instance of the doubly-perpendicular quadrilateral pair via circumcenters."""
    _, A, B, C, D = gauge.corners()
    O_a = circumcenter(C, B, D)
    O_b = circumcenter(D, C, A)
    O_c = circumcenter(A, D, B)
    O_d = circumcenter(B, A, C)
    return Lemma2Config(A=A, B=B, C=C, D=D, P=O_c, Q=O_d, R=O_a, S=O_b,
                        gauge=gauge)


# -- checkers ------------------------------------------------------------------


def check_thm1(cfg: GaugeConfig) -> bool:
    objs = build_thm1(cfg)
    return is_midpoint(objs["P"], objs["Q"], objs["R"])


def check_thm2(cfg: GaugeConfig) -> bool:
    objs = build_thm2(cfg)
    return is_midpoint(objs["P"], objs["Q"], objs["R"])


def check_lemma3(cfg: GaugeConfig) -> bool:
    objs = build_lemma3(cfg)
    return are_coaxial(objs["circle_ac"], objs["circle_bd"], objs["circle_pmn"])


def check_thm0(cfg: CyclicConfig) -> bool:
    objs = build_thm0(cfg)
    return is_midpoint(objs["P"], objs["Q"], objs["R"])


def check_butterfly_chord(cfg: ChordButterflyConfig) -> bool:
    objs = build_chord(cfg)
    return is_midpoint(objs["M"], objs["G"], objs["H"])


def check_lemma1(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Perpendicular-bisector meets X (of AB, CD) and Y (of BC, DA) against the Newton line."""
    X = intersect_lines(perp_bisector(a, b), perp_bisector(c, d))
    Y = intersect_lines(perp_bisector(b, c), perp_bisector(d, a))
    return is_perpendicular(line_through(X, Y), newton_line(a, b, c, d))


def check_lemma2(cfg: Lemma2Config) -> bool:
    """Verify the six perpendicularity constraints, then JK against the Newton line."""
    pq = line_through(cfg.P, cfg.Q)
    qr = line_through(cfg.Q, cfg.R)
    rs = line_through(cfg.R, cfg.S)
    sp = line_through(cfg.S, cfg.P)
    pr = line_through(cfg.P, cfg.R)
    sq = line_through(cfg.S, cfg.Q)
    constraints = (
        is_perpendicular(pq, line_through(cfg.A, cfg.B)),
        is_perpendicular(qr, line_through(cfg.B, cfg.C)),
        is_perpendicular(rs, line_through(cfg.C, cfg.D)),
        is_perpendicular(sp, line_through(cfg.D, cfg.A)),
        is_perpendicular(pr, line_through(cfg.B, cfg.D)),
        is_perpendicular(sq, line_through(cfg.A, cfg.C)),
    )
    if not all(constraints):
        return False
    J = intersect_lines(pq, rs)
    K = intersect_lines(qr, sp)
    return is_perpendicular(line_through(J, K),
                            newton_line(cfg.A, cfg.B, cfg.C, cfg.D))


def check_thm1_harmonic(cfg: GaugeConfig) -> bool:
    """Harmonic-pencil and parallelism facts behind the projective proof.

    With F = BC meet DA and G = CD meet AB: the pencil at F through
    (P, G; A, B) and through (P, G; R, Q) is harmonic, the same value
    read on the transversal AB is -1, and QR is parallel to FG.
    """
    objs = build_thm1(cfg)
    P, A, B, C, D = objs["P"], objs["A"], objs["B"], objs["C"], objs["D"]
    F = intersect_lines(line_through(B, C), line_through(D, A))
    G = intersect_lines(objs["line_CD"], objs["line_AB"])
    if pencil_cross_ratio(F, P, G, A, B) != -1:
        return False
    if pencil_cross_ratio(F, P, G, objs["R"], objs["Q"]) != -1:
        return False
    S = intersect_lines(line_through(F, P), objs["line_AB"])
    if cross_ratio(S, G, A, B) != -1:
        return False
    return is_parallel(objs["axis"], line_through(F, G))


def check_thm2_perpendicularity(cfg: GaugeConfig) -> bool:
    """PW is perpendicular to UV, where U = AD meet BC and V = AB meet CD."""
    objs = build_thm2(cfg)
    U = intersect_lines(objs["line_AD"], objs["line_BC"])
    V = intersect_lines(line_through(objs["A"], objs["B"]),
                        line_through(objs["C"], objs["D"]))
    return is_perpendicular(objs["line_PW"], line_through(U, V))


# -- gauge conversion ----------------------------------------------------------


def gauge_from_cyclic(cfg: CyclicConfig) -> GaugeConfig:
    """Map a concyclic quadrilateral into the diagonal gauge by a rational similarity.

    Translate the diagonal intersection to the origin, then multiply by the
    complex conjugate of the AC direction: AC lands on the x-axis and BD on
    a line through the origin, all with rational coordinates.  Perpendicular
    diagonals have no finite slope k and raise DegenerateConfig.
    """
    A, B, C, D = cfg.corners()
    P = intersect_lines(line_through(A, C), line_through(B, D))
    ux = C.x - A.x
    uy = C.y - A.y

    def transform(z: Point) -> Point:
        zx = z.x - P.x
        zy = z.y - P.y
        return Point(zx * ux + zy * uy, zy * ux - zx * uy)

    A2, B2, C2, D2 = (transform(z) for z in (A, B, C, D))
    if not B2.x:
        raise DegenerateConfig("perpendicular diagonals have no finite gauge slope")
    k = B2.y / B2.x
    return GaugeConfig(A2.x, B2.x, C2.x, D2.x, k)


# -- symbolic <-> numeric bridge -----------------------------------------------


def evaluate_object(obj, assignment: Mapping[str, Fraction]):
    """Exact evaluation of a symbolic Point/Line/Circle at a rational assignment."""
    if isinstance(obj, Point):
        return Point(_eval_scalar(obj.x, assignment), _eval_scalar(obj.y, assignment))
    if isinstance(obj, Line):
        return Line(_eval_scalar(obj.u, assignment), _eval_scalar(obj.v, assignment),
                    _eval_scalar(obj.w, assignment))
    if isinstance(obj, Circle):
        return Circle(_eval_scalar(obj.d, assignment), _eval_scalar(obj.e, assignment),
                      _eval_scalar(obj.f, assignment))
    raise TypeError(f"cannot evaluate {type(obj).__name__}")


def _eval_scalar(value, assignment):
    if isinstance(value, RationalFunction):
        return value.evaluate(assignment)
    return Fraction(value)


# -- samplers -------------------------------------------------------------------


def sample_gauge(rng, bound: int, require_interior: bool = True) -> GaugeConfig:
    """Draw a proper gauge configuration by rejection.

    Enforced: a, b, c, d, k nonzero; a != c; b != d; and by default P
    strictly inside both diagonals (a*c < 0, b*d < 0).
    """
    for _ in range(_MAX_REDRAWS):
        a, b, c, d, k = (sample_rational(rng, bound) for _ in range(5))
        if not a or not b or not c or not d or not k:
            continue
        if a == c or b == d:
            continue
        if require_interior and not (a * c < 0 and b * d < 0):
            continue
        return GaugeConfig(a, b, c, d, k)
    raise RuntimeError("gauge sampler exhausted its redraw budget")


def sample_cyclic(rng, bound: int) -> CyclicConfig:
    """Distinct half-angle parameters (excluding +-1) with non-parallel diagonals."""
    for _ in range(_MAX_REDRAWS):
        ts = tuple(sample_rational(rng, bound) for _ in range(4))
        if len(set(ts)) != 4 or any(abs(t) == 1 for t in ts):
            continue
        A, B, C, D = (on_unit_circle(t) for t in ts)
        if (C.x - A.x) * (D.y - B.y) == (C.y - A.y) * (D.x - B.x):
            continue  # parallel diagonals never meet at a P
        return CyclicConfig(*ts)
    raise RuntimeError("cyclic sampler exhausted its redraw budget")


def sample_chord(rng, bound: int) -> ChordButterflyConfig:
    """Distinct parameters (excluding +-1) with C and F on opposite sides of AB."""
    unit = Circle(Fraction(0), Fraction(0), Fraction(-1))
    for _ in range(_MAX_REDRAWS):
        ts = tuple(sample_rational(rng, bound) for _ in range(4))
        if len(set(ts)) != 4 or any(abs(t) == 1 for t in ts):
            continue
        A, B, C, E = (on_unit_circle(t) for t in ts)
        M = midpoint(A, B)
        ab = line_through(A, B)
        try:
            F = second_intersection(unit, line_through(E, M), E)
        except DegenerateConfig:
            continue
        side_c = ab.u * C.x + ab.v * C.y + ab.w
        side_f = ab.u * F.x + ab.v * F.y + ab.w
        if side_c * side_f < 0:
            return ChordButterflyConfig(*ts)
    raise RuntimeError("chord sampler exhausted its redraw budget")


def sample_quad(rng, bound: int) -> QuadConfig:
    """Four unconstrained random vertices; degeneracies surface as checker skips."""
    coords = [sample_rational(rng, bound) for _ in range(8)]
    return QuadConfig(Point(coords[0], coords[1]), Point(coords[2], coords[3]),
                      Point(coords[4], coords[5]), Point(coords[6], coords[7]))


def sample_lemma2(rng, bound: int) -> Lemma2Config:
    for _ in range(_MAX_REDRAWS):
        gauge = sample_gauge(rng, bound)
        try:
            return build_lemma2(gauge)
        except DegenerateConfig:
            continue  # quadrilateral lacked one of the four circumcenters
    raise RuntimeError("lemma2 sampler exhausted its redraw budget")


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    trial: int
    params: tuple[tuple[str, object], ...]
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run (one theorem, one mode).

    Serializes to stable key:value text and a flat dict; wall-clock time is
    carried in memory only, so serialized reports are deterministic.
    `passed + skipped = attempted` whenever there is no counterexample.
    """

    theorem: str
    mode: str
    attempted: int
    passed: int
    skipped: int
    trials: int | None = None
    seed: int | None = None
    bound: int | None = None
    checks: tuple[tuple[str, bool], ...] = ()
    counterexample: Counterexample | None = None
    failure: str | None = None
    elapsed: float | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_flat(self) -> dict[str, str]:
        flat = {"theorem": self.theorem, "mode": self.mode}
        if self.trials is not None:
            flat["trials"] = str(self.trials)
        if self.seed is not None:
            flat["seed"] = str(self.seed)
        if self.bound is not None:
            flat["bound"] = str(self.bound)
        flat["attempted"] = str(self.attempted)
        flat["passed"] = str(self.passed)
        flat["skipped"] = str(self.skipped)
        for check_id, ok in self.checks:
            flat[f"check.{check_id}"] = "ok" if ok else "FAIL"
        if self.counterexample is not None:
            flat["counterexample.trial"] = str(self.counterexample.trial)
            for name, value in self.counterexample.params:
                flat[f"counterexample.params.{name}"] = format_rational(value)
            flat["counterexample.detail"] = self.counterexample.detail
        if self.failure is not None:
            flat["failure"] = self.failure
        flat["result"] = "pass" if self.ok else "fail"
        return flat

    def to_text(self) -> str:
        return "\n".join(f"{key}: {value}" for key, value in self.to_flat().items())


# -- symbolic proofs --------------------------------------------------------------


def _run_check_plan(theorem: str, plan, *, strict: bool) -> VerificationReport:
    results = []
    failure = None
    start = time.perf_counter()
    for check_id, thunk in plan:
        ok = thunk()
        results.append((check_id, ok))
        if not ok and failure is None:
            failure = f"SymbolicMismatch: {check_id}"
            if strict:
                raise SymbolicMismatch(check_id)
    elapsed = time.perf_counter() - start
    passed = sum(1 for _, ok in results if ok)
    return VerificationReport(theorem=theorem, mode="symbolic",
                              attempted=len(results), passed=passed, skipped=0,
                              checks=tuple(results), failure=failure,
                              elapsed=elapsed)


def prove_thm1(strict: bool = False) -> VerificationReport:
    """Symbolic proof of the first generalization, step by step against closed forms."""
    objs = build_thm1(GaugeConfig.symbolic())
    cf = closedforms
    plan = [
        ("thm1.O_a", lambda: objs["O_a"] == cf.O_A),
        ("thm1.O_b", lambda: objs["O_b"] == cf.O_B),
        ("thm1.O_c", lambda: objs["O_c"] == cf.O_C),
        ("thm1.O_d", lambda: objs["O_d"] == cf.O_D),
        ("thm1.M", lambda: objs["M"] == cf.M_CENTERS),
        ("thm1.N", lambda: objs["N"] == cf.N_CENTERS),
        ("thm1.axis", lambda: objs["axis"] == cf.AXIS),
        ("thm1.line_AB", lambda: objs["line_AB"] == cf.LINE_AB),
        ("thm1.line_CD", lambda: objs["line_CD"] == cf.LINE_CD),
        ("thm1.Q", lambda: objs["Q"] == cf.Q_FIRST),
        ("thm1.R", lambda: objs["R"] == cf.R_FIRST),
        ("thm1.midpoint_PQR",
         lambda: is_midpoint(objs["P"], objs["Q"], objs["R"])),
    ]
    return _run_check_plan("thm1", plan, strict=strict)


def prove_thm2(strict: bool = False) -> VerificationReport:
    """Symbolic proof of the second generalization, including the shared axis."""
    objs = build_thm2(GaugeConfig.symbolic())
    cf = closedforms
    plan = [
        ("thm2.X", lambda: objs["X"] == cf.X_MEET),
        ("thm2.Y", lambda: objs["Y"] == cf.Y_MEET),
        ("thm2.Z", lambda: objs["Z"] == cf.Z_MEET),
        ("thm2.W", lambda: objs["W"] == cf.W_VERTEX),
        ("thm2.W_x", lambda: objs["W"].x == cf.W_X),
        ("thm2.W_y", lambda: objs["W"].y == cf.W_Y),
        ("thm2.axis", lambda: objs["axis"] == cf.AXIS),
        ("thm2.Q", lambda: objs["Q"] == cf.Q_SECOND),
        ("thm2.R", lambda: objs["R"] == cf.R_SECOND),
        ("thm2.midpoint_PQR",
         lambda: is_midpoint(objs["P"], objs["Q"], objs["R"])),
        ("thm2.axis_matches_thm1",
         lambda: objs["axis"] == build_thm1(GaugeConfig.symbolic())["axis"]),
    ]
    return _run_check_plan("thm2", plan, strict=strict)


def _dot_from(origin: Point, p: Point, q: Point):
    return ((p.x - origin.x) * (q.x - origin.x)
            + (p.y - origin.y) * (q.y - origin.y))


def prove_lemma3(strict: bool = False) -> VerificationReport:
    """Symbolic proof of coaxiality via the three equal power ratios."""
    objs = build_lemma3(GaugeConfig.symbolic())
    cf = closedforms

    def ratio_at(point_key: str):
        num = power_of_point(objs[point_key], objs["circle_ac"])
        den = power_of_point(objs[point_key], objs["circle_bd"])
        return num / den

    def diagonal_ratio():
        num = _dot_from(objs["P"], objs["B"], objs["D"])
        den = _dot_from(objs["P"], objs["A"], objs["C"])
        return num / den

    plan = [
        ("lemma3.O_a", lambda: objs["O_a"] == cf.O_A),
        ("lemma3.O_b", lambda: objs["O_b"] == cf.O_B),
        ("lemma3.O_c", lambda: objs["O_c"] == cf.O_C),
        ("lemma3.O_d", lambda: objs["O_d"] == cf.O_D),
        ("lemma3.ratio_P", lambda: ratio_at("P") == cf.POWER_RATIO),
        ("lemma3.ratio_M", lambda: ratio_at("M") == cf.POWER_RATIO),
        ("lemma3.ratio_N", lambda: ratio_at("N") == cf.POWER_RATIO),
        ("lemma3.ratio_chain",
         lambda: (diagonal_ratio() == cf.POWER_RATIO
                  and ratio_at("P") == ratio_at("M") == ratio_at("N")
                  == diagonal_ratio())),
        ("lemma3.pencil",
         lambda: are_coaxial(objs["circle_ac"], objs["circle_bd"],
                             objs["circle_pmn"])),
    ]
    return _run_check_plan("lemma3", plan, strict=strict)


# ids of the checks that reproduce stored construction-step formulas, as
# opposed to the theorem-level identities proved on top of them
CLOSED_FORM_CHECK_IDS = (
    "thm1.O_a", "thm1.O_b", "thm1.O_c", "thm1.O_d", "thm1.M", "thm1.N",
    "thm1.axis", "thm1.line_AB", "thm1.line_CD", "thm1.Q", "thm1.R",
    "thm2.X", "thm2.Y", "thm2.Z", "thm2.W", "thm2.W_x", "thm2.W_y",
    "thm2.axis", "thm2.Q", "thm2.R",
    "lemma3.O_a", "lemma3.O_b", "lemma3.O_c", "lemma3.O_d",
    "lemma3.ratio_P", "lemma3.ratio_M", "lemma3.ratio_N", "lemma3.ratio_chain",
)


# -- suite runner ------------------------------------------------------------------


_CLAIMS = {
    "butterfly_chord": "midpoint(M, G, H)",
    "thm0_cyclic": "midpoint(P, Q, R)",
    "thm1": "midpoint(P, Q, R)",
    "thm2": "midpoint(P, Q, R)",
    "lemma1": "perpendicular(line(X, Y), newton_line(A, B, C, D))",
    "lemma2": "six perpendicularities and perpendicular(line(J, K), "
              "newton_line(A, B, C, D))",
    "lemma3": "coaxial(circle_on_diameter(O_a, O_c), circle_on_diameter(O_b, O_d), "
              "circumcircle(P, M, N))",
}

_SUITE: dict[str, tuple[Callable, Callable]] = {
    "butterfly_chord": (sample_chord, check_butterfly_chord),
    "thm0_cyclic": (sample_cyclic, check_thm0),
    "thm1": (sample_gauge, check_thm1),
    "thm2": (sample_gauge, check_thm2),
    "lemma1": (sample_quad,
               lambda cfg: check_lemma1(cfg.A, cfg.B, cfg.C, cfg.D)),
    "lemma2": (sample_lemma2, check_lemma2),
    "lemma3": (sample_gauge, check_lemma3),
}

NUMERIC_ORDER = ("butterfly_chord", "thm0_cyclic", "thm1", "thm2",
                 "lemma1", "lemma2", "lemma3")
SYMBOLIC_ORDER = ("thm1", "thm2", "lemma3")

_PROVERS = {"thm1": prove_thm1, "thm2": prove_thm2, "lemma3": prove_lemma3}

DEFAULT_SKIP_LIMIT = Fraction(1, 5)


def run_numeric(theorem: str, trials: int = 1000, seed: int = 0, bound: int = 20,
                skip_limit: Fraction = DEFAULT_SKIP_LIMIT) -> VerificationReport:
    """Randomized trials for one theorem; per-trial rng streams keep runs replayable."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    sampler, checker = _SUITE[theorem]
    attempted = passed = skipped = 0
    counterexample = None
    start = time.perf_counter()
    for trial in range(trials):
        rng = derive_rng(seed, theorem, trial)
        cfg = sampler(rng, bound)
        attempted += 1
        try:
            verdict = checker(cfg)
        except DegenerateConfig:
            skipped += 1
            continue
        if verdict:
            passed += 1
        else:
            counterexample = Counterexample(
                trial=trial, params=cfg.params(),
                detail=f"assertion {_CLAIMS[theorem]} failed")
            break
    elapsed = time.perf_counter() - start
    failure = None
    if counterexample is not None:
        failure = f"counterexample at trial {counterexample.trial}"
    elif Fraction(skipped, attempted) > skip_limit:
        failure = (f"skip rate {skipped}/{attempted} exceeds limit "
                   f"{format_rational(skip_limit)}")
    return VerificationReport(theorem=theorem, mode="numeric",
                              attempted=attempted, passed=passed, skipped=skipped,
                              trials=trials, seed=seed, bound=bound,
                              counterexample=counterexample, failure=failure,
                              elapsed=elapsed)


def run_suite(mode: str = "both", trials: int = 1000, seed: int = 0,
              bound: int = 20,
              skip_limit: Fraction = DEFAULT_SKIP_LIMIT) -> list[VerificationReport]:
    """Every checker in canonical order: symbolic proofs first, then numeric trials."""
    if mode not in ("numeric", "symbolic", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    reports = []
    if mode in ("symbolic", "both"):
        for theorem in SYMBOLIC_ORDER:
            reports.append(_PROVERS[theorem]())
    if mode in ("numeric", "both"):
        for theorem in NUMERIC_ORDER:
            reports.append(run_numeric(theorem, trials=trials, seed=seed,
                                       bound=bound, skip_limit=skip_limit))
    return reports
