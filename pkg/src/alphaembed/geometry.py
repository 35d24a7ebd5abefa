"""Planar points, quads and the alpha-quad predicate family.

A quad ABCD is an alpha-quad when f_alpha(AB, CD) = f_alpha(AD, BC), where
f_alpha(x, y) = x^a + y^a for finite a != 0, x*y for the zero tag, and
max/min(x, y) for the +/-infinity tags.  This module provides the residuals,
the extremal-pair / kite classification of side-length quadruples, the
circumradius characterization, the generic homogeneous-symmetric-f residual
and the proper-polygon (Jordan curve) test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ContractError, DegenerateConfigError, DomainError

#: |cross product| below this (on unit-normalized coordinates) counts as aligned.
ORIENT_EPS = 1e-12

#: Default window and step of the finite-alpha root scan in solve_alpha.
ALPHA_SCAN_WINDOW = 50.0
ALPHA_SCAN_STEP = 0.01


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite point ({self.x}, {self.y})")

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "Point":
        return Point(z.real, z.imag)


class AlphaKind(Enum):
    FINITE = "finite"
    ZERO = "zero"
    PLUS_INF = "inf"
    MINUS_INF = "-inf"


@dataclass(frozen=True)
class ExtendedAlpha:
    """The parameter alpha in R u {-inf, 0, +inf}; 0 is its own tag."""

    kind: AlphaKind
    value: float = 0.0

    def __post_init__(self):
        if self.kind is AlphaKind.FINITE:
            if not math.isfinite(self.value) or self.value == 0.0:
                raise DomainError(f"finite alpha must be a nonzero real, got {self.value}")

    @staticmethod
    def finite(a: float) -> "ExtendedAlpha":
        return ExtendedAlpha(AlphaKind.FINITE, float(a))

    @staticmethod
    def zero() -> "ExtendedAlpha":
        return ExtendedAlpha(AlphaKind.ZERO)

    @staticmethod
    def plus_inf() -> "ExtendedAlpha":
        return ExtendedAlpha(AlphaKind.PLUS_INF)

    @staticmethod
    def minus_inf() -> "ExtendedAlpha":
        return ExtendedAlpha(AlphaKind.MINUS_INF)

    @staticmethod
    def of(a) -> "ExtendedAlpha":
        """Coerce a float / str / ExtendedAlpha; 0 maps to the zero tag."""
        if isinstance(a, ExtendedAlpha):
            return a
        if isinstance(a, str):
            key = a.strip().lower()
            table = {
                "inf": ExtendedAlpha.plus_inf(), "+inf": ExtendedAlpha.plus_inf(),
                "-inf": ExtendedAlpha.minus_inf(), "zero": ExtendedAlpha.zero(),
            }
            if key in table:
                return table[key]
            a = float(a)
        if a == 0:
            return ExtendedAlpha.zero()
        if math.isinf(a):
            return ExtendedAlpha.plus_inf() if a > 0 else ExtendedAlpha.minus_inf()
        return ExtendedAlpha.finite(a)

    @property
    def is_finite(self) -> bool:
        return self.kind is AlphaKind.FINITE

    def __str__(self):
        if self.kind is AlphaKind.FINITE:
            return f"{self.value:g}"
        return {AlphaKind.ZERO: "zero", AlphaKind.PLUS_INF: "inf",
                AlphaKind.MINUS_INF: "-inf"}[self.kind]


def f_alpha(x: float, y: float, alpha: ExtendedAlpha) -> float:
    """x^a + y^a / x*y / max / min depending on the alpha tag.  Requires x, y > 0."""
    if not (x > 0 and y > 0):
        raise DomainError(f"f_alpha needs positive arguments, got ({x}, {y})")
    if alpha.kind is AlphaKind.FINITE:
        a = alpha.value
        return x ** a + y ** a
    if alpha.kind is AlphaKind.ZERO:
        return x * y
    if alpha.kind is AlphaKind.PLUS_INF:
        return max(x, y)
    return min(x, y)


@dataclass(frozen=True)
class Quad:
    """Ordered vertices A, B, C, D; sides AB, BC, CD, DA all positive."""

    a: Point
    b: Point
    c: Point
    d: Point

    def __post_init__(self):
        pts = self.points
        for i in range(4):
            for j in range(i + 1, 4):
                if pts[i].dist(pts[j]) == 0.0:
                    raise DomainError(f"quad vertices {i} and {j} coincide")

    @property
    def points(self) -> tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    def sides(self) -> tuple[float, float, float, float]:
        """(AB, BC, CD, DA)."""
        return (self.a.dist(self.b), self.b.dist(self.c),
                self.c.dist(self.d), self.d.dist(self.a))

    @staticmethod
    def from_coords(coords: Sequence[Sequence[float]]) -> "Quad":
        return Quad(*(Point(float(p[0]), float(p[1])) for p in coords))


@dataclass(frozen=True)
class SideLengths:
    """Cyclic side lengths l1..l4, all strictly positive."""

    l1: float
    l2: float
    l3: float
    l4: float

    def __post_init__(self):
        for name, v in zip(("l1", "l2", "l3", "l4"), self.as_tuple()):
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"side length {name}={v} must be positive and finite")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.l1, self.l2, self.l3, self.l4)


def alpha_residual(q: Quad, alpha: ExtendedAlpha) -> float:
    """f_alpha(AB, CD) - f_alpha(AD, BC); zero iff q is an alpha-quad."""
    ab, bc, cd, da = q.sides()
    return f_alpha(ab, cd, alpha) - f_alpha(da, bc, alpha)


def residual_scale(q: Quad, alpha: ExtendedAlpha) -> float:
    """Relative scale for residual comparisons: f_alpha at the max side length."""
    m = max(q.sides())
    return abs(f_alpha(m, m, alpha))


def is_alpha_quad(q: Quad, alpha: ExtendedAlpha, tol: float = 1e-12) -> bool:
    if not tol > 0:
        raise DomainError("tol must be positive")
    return abs(alpha_residual(q, alpha)) <= tol * residual_scale(q, alpha)


def has_extremal_pair(l: SideLengths) -> bool:
    """One pair of opposite sides attains both the max and min side length."""
    ls = l.as_tuple()
    hi, lo = max(ls), min(ls)
    for pair in ((l.l1, l.l3), (l.l2, l.l4)):
        if max(pair) == hi and min(pair) == lo:
            return True
    return False


def is_kite(l: SideLengths, tol: float = 1e-12) -> bool:
    """{l1, l3} == {l2, l4} as multisets, relative to the max length."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    scale = max(l.as_tuple())
    p = sorted((l.l1, l.l3))
    q = sorted((l.l2, l.l4))
    return abs(p[0] - q[0]) <= tol * scale and abs(p[1] - q[1]) <= tol * scale


@dataclass(frozen=True)
class AlphaSolveResult:
    """Roots of the side-length equation; all_alpha is the kite sentinel."""

    all_alpha: bool
    roots: tuple[ExtendedAlpha, ...]

    def __bool__(self):
        return self.all_alpha or bool(self.roots)


def _g_sign(ls: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """Sign of g(alpha) = (l1^a + l3^a - l2^a - l4^a)/a, overflow-free.

    Uses sign(logaddexp(a ln l1, a ln l3) - logaddexp(a ln l2, a ln l4)) * sign(a),
    which equals sign(g) and extends continuously through a = 0.
    """
    logs = np.log(ls)
    a = np.asarray(alphas, dtype=float)
    A = np.logaddexp(np.multiply.outer(a, logs[0]), np.multiply.outer(a, logs[2]))
    B = np.logaddexp(np.multiply.outer(a, logs[1]), np.multiply.outer(a, logs[3]))
    s = np.sign(A - B) * np.sign(a)
    z = np.log(ls[0] * ls[2] / (ls[1] * ls[3]))
    s = np.where(a == 0.0, np.sign(z), s)
    return s


def solve_alpha(l: SideLengths, window: float = ALPHA_SCAN_WINDOW,
                step: float = ALPHA_SCAN_STEP) -> AlphaSolveResult:
    """All alpha for which a quad with these cyclic side lengths is an alpha-quad.

    Kites satisfy every equation (distinct "all alpha" sentinel); quadruples
    without an extremal pair satisfy none.  Otherwise the match is a single
    symbolic tag (-inf / +inf / 0) or a finite root of g, located by a sign
    scan of [-window, window] at the given step refined by bisection.
    """
    ls = np.array(l.as_tuple(), dtype=float)
    s = ls.sum()
    for v in ls:
        if not v < s - v:
            raise DomainError("side lengths not realizable as a quad")
    ls = ls / ls.max()  # homogeneous equation: normalize for conditioning

    if is_kite(l):
        return AlphaSolveResult(True, ())
    if not has_extremal_pair(l):
        return AlphaSolveResult(False, ())

    rel = 1e-12
    if abs(min(ls[0], ls[2]) - min(ls[1], ls[3])) <= rel:
        return AlphaSolveResult(False, (ExtendedAlpha.minus_inf(),))
    if abs(max(ls[0], ls[2]) - max(ls[1], ls[3])) <= rel:
        return AlphaSolveResult(False, (ExtendedAlpha.plus_inf(),))
    if abs(math.log(ls[0] * ls[2] / (ls[1] * ls[3]))) <= rel:
        return AlphaSolveResult(False, (ExtendedAlpha.zero(),))

    grid = np.arange(-window, window + step, step)
    signs = _g_sign(ls, grid)
    brackets = [(grid[i], grid[i + 1]) for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]]
    if not brackets:
        # extremal pair guarantees a root (g(-inf) < 0 < g(+inf)), but it can
        # escape the scan window for near-kite quadruples; extend adaptively.
        brackets = [_extend_bracket(ls, window)]
    roots: list[ExtendedAlpha] = []
    for lo, hi in brackets:
        slo = _g_sign(ls, np.array([lo]))[0]
        for _ in range(200):
            if hi - lo <= 1e-13 * max(1.0, abs(lo), abs(hi)):
                break
            mid = 0.5 * (lo + hi)
            sm = _g_sign(ls, np.array([mid]))[0]
            if sm == 0.0:
                lo = hi = mid
                break
            if sm == slo:
                lo = mid
            else:
                hi = mid
        roots.append(ExtendedAlpha.finite(0.5 * (lo + hi)))
    return AlphaSolveResult(False, tuple(roots))


def _extend_bracket(ls: np.ndarray, window: float) -> tuple[float, float]:
    """Bracket the single sign change of g outside [-window, window]."""
    from .errors import NumericRangeError

    s_lo = _g_sign(ls, np.array([-window]))[0]
    s_hi = _g_sign(ls, np.array([window]))[0]
    if s_lo < 0 < s_hi:  # missed a change inside the window; refine the scan
        raise NumericRangeError("alpha scan resolution too coarse")
    w = window
    if s_hi < 0:  # root beyond +window
        while w < 1e8:
            w2 = 2.0 * w
            if _g_sign(ls, np.array([w2]))[0] > 0:
                return (w, w2)
            w = w2
    else:  # root below -window
        while w < 1e8:
            w2 = 2.0 * w
            if _g_sign(ls, np.array([-w2]))[0] < 0:
                return (-w2, -w)
            w = w2
    raise NumericRangeError("alpha root beyond +-1e8")


def _line_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    """Intersection of lines (p1 p2) and (p3 p4)."""
    d1 = (p2.x - p1.x, p2.y - p1.y)
    d2 = (p4.x - p3.x, p4.y - p3.y)
    den = d1[0] * d2[1] - d1[1] * d2[0]
    scale = max(abs(v) for v in (*d1, *d2))
    if abs(den) <= ORIENT_EPS * scale * scale:
        raise DegenerateConfigError("diagonals are parallel")
    t = ((p3.x - p1.x) * d2[1] - (p3.y - p1.y) * d2[0]) / den
    return Point(p1.x + t * d1[0], p1.y + t * d1[1])


def _circumradius(p1: Point, p2: Point, p3: Point) -> float:
    a = p2.dist(p3)
    b = p1.dist(p3)
    c = p1.dist(p2)
    area2 = abs((p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x))
    scale = max(a, b, c)
    if area2 <= ORIENT_EPS * scale * scale:
        raise DegenerateConfigError("circumradius of a flat triangle")
    return a * b * c / (2.0 * area2)


def circumradii(q: Quad) -> tuple[float, float, float, float]:
    """Circumradii of ABP, BCP, CDP, DAP where P is the diagonals' intersection."""
    p = _line_intersection(q.a, q.c, q.b, q.d)
    scale = max(q.sides())
    for v in q.points:
        if p.dist(v) <= ORIENT_EPS * scale:
            raise DegenerateConfigError("diagonal intersection coincides with a vertex")
    return (_circumradius(q.a, q.b, p), _circumradius(q.b, q.c, p),
            _circumradius(q.c, q.d, p), _circumradius(q.d, q.a, p))


def circumradii_residual(q: Quad, alpha: ExtendedAlpha) -> float:
    """f_alpha(R1, R3) - f_alpha(R2, R4); vanishes together with alpha_residual."""
    r1, r2, r3, r4 = circumradii(q)
    return f_alpha(r1, r3, alpha) - f_alpha(r2, r4, alpha)


_HOMOGENEITY_PROBES = ((1.0, 1.0), (0.7, 1.9), (2.4, 0.31), (1.3, 3.7))
_HOMOGENEITY_LAMBDAS = (0.5, 2.0, 3.7)


def f_quad_residual(q: Quad, f: Callable[[float, float], float]) -> float:
    """f(AB, CD) - f(BC, AD) for a homogeneous symmetric f of two positive reals.

    f is spot-checked: f(x, y) = f(y, x) and f(s*x, s*y)/f(x, y) independent of
    (x, y) over a fixed probe set; a failure raises ContractError.
    """
    for x, y in _HOMOGENEITY_PROBES:
        fx = f(x, y)
        if abs(fx - f(y, x)) > 1e-9 * max(1.0, abs(fx)):
            raise ContractError("f is not symmetric")
    for lam in _HOMOGENEITY_LAMBDAS:
        ratios = []
        for x, y in _HOMOGENEITY_PROBES:
            base = f(x, y)
            if base == 0.0:
                continue
            ratios.append(f(lam * x, lam * y) / base)
        if ratios and (max(ratios) - min(ratios)) > 1e-9 * max(1.0, abs(ratios[0])):
            raise ContractError("f is not homogeneous")
    ab, bc, cd, da = q.sides()
    return f(ab, cd) - f(bc, da)


@dataclass(frozen=True)
class ProperPolygonReport:
    proper: bool
    orientation: str  # "positive" | "negative" | "undefined"


def _orient_sign(a: Point, b: Point, c: Point, eps: float) -> int:
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if abs(det) <= eps:
        return 0
    return 1 if det > 0 else -1


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p collinear with [a, b] assumed; is p within the segment's bounding box?"""
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point, eps: float) -> bool:
    """Closed-segment intersection test via orientation signs."""
    d1 = _orient_sign(p3, p4, p1, eps)
    d2 = _orient_sign(p3, p4, p2, eps)
    d3 = _orient_sign(p1, p2, p3, eps)
    d4 = _orient_sign(p1, p2, p4, eps)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _on_segment(p3, p4, p1):
        return True
    if d2 == 0 and _on_segment(p3, p4, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, p3):
        return True
    if d4 == 0 and _on_segment(p1, p2, p4):
        return True
    return False


def signed_area(pts: Sequence[Point]) -> float:
    s = 0.0
    for i in range(len(pts)):
        p, q = pts[i], pts[(i + 1) % len(pts)]
        s += p.x * q.y - q.x * p.y
    return 0.5 * s


def is_proper_polygon(pts: Sequence[Point]) -> ProperPolygonReport:
    """Jordan-curve test for the closed broken line through pts.

    Non-adjacent edges must not meet at all; adjacent edges only at their
    shared endpoint.  Orientation is the sign of the area; near-degenerate
    inputs report "undefined" rather than guessing.
    """
    pts = list(pts)
    n = len(pts)
    if n < 3:
        raise DomainError("a polygon needs at least 3 points")
    scale = max(max(abs(p.x), abs(p.y)) for p in pts) or 1.0
    span = max(p.dist(q) for i, p in enumerate(pts) for q in pts[i + 1:])
    if span == 0.0:
        raise DomainError("all points coincide")
    eps_pt = ORIENT_EPS * max(scale, span)
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i].dist(pts[j]) <= eps_pt:
                raise DomainError(f"points {i} and {j} coincide")

    eps = ORIENT_EPS * span * span
    proper = True
    for i in range(n):
        a1, a2 = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            b1, b2 = pts[j], pts[(j + 1) % n]
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                # shared endpoint allowed; any further contact is improper
                shared = a2 if j == i + 1 else a1
                other_a = a1 if j == i + 1 else a2
                other_b = b2 if j == i + 1 else b1
                if _orient_sign(shared, other_a, other_b, eps) == 0:
                    # collinear neighbors: improper if they overlap beyond the joint
                    if (other_a.x - shared.x) * (other_b.x - shared.x) + \
                       (other_a.y - shared.y) * (other_b.y - shared.y) > 0:
                        proper = False
            else:
                if _segments_intersect(a1, a2, b1, b2, eps):
                    proper = False
    if not proper:
        return ProperPolygonReport(False, "undefined")
    area = signed_area(pts)
    if abs(area) <= eps:
        return ProperPolygonReport(False, "undefined")
    return ProperPolygonReport(True, "positive" if area > 0 else "negative")
