"""Ising parameter conversions and the star-triangle transformation.

Edge labels follow the mod-6 picture: odd labels {1, 3, 5} sit on the
triangle (the three mutual edges), even labels {2, 4, 6} on the star (the
three edges of the degree-3 vertex); label i pairs with i + 3.  A triple is
stored in ascending label order, so a triangle triple is (theta1, theta3,
theta5) and a star triple is (theta2, theta4, theta6).

Three independent formulations of the same transformation are provided:

* baxter  : k' from the x_i = tan(theta_i/2), then tan(theta_i) tan(theta_{i+3}) = 1/k';
* closed  : the direct trigonometric formulas for cos(theta_even) and sin(theta_odd);
* elliptic: solve for the modulus m with F(t1) + F(t3) + F(t5) = K(m), then
            tau_{i+3} = K - tau_i in the elliptic angles.

They agree to ~1e-12 on admissible triples and are cross-checked in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .elliptic import Modulus, am, complete_K, incomplete_F
from .errors import ConsistencyError, ContractError, DomainError, NumericRangeError

TRIANGLE = "triangle"
STAR = "star"


@dataclass(frozen=True)
class Theta:
    """An edge angle in the open interval (0, pi/2)."""

    value: float

    def __post_init__(self):
        if not (0.0 < self.value < math.pi / 2):
            raise DomainError(f"theta must lie in (0, pi/2), got {self.value}")


@dataclass(frozen=True)
class ThetaTriple:
    """Three edge angles with a role tag, in ascending label order.

    role == "triangle": (t1, t2, t3) are (theta1, theta3, theta5);
    role == "star":     (t1, t2, t3) are (theta2, theta4, theta6).
    """

    t1: Theta
    t2: Theta
    t3: Theta
    role: str

    def __post_init__(self):
        if self.role not in (TRIANGLE, STAR):
            raise DomainError(f"role must be 'triangle' or 'star', got {self.role!r}")

    @staticmethod
    def of(values, role: str) -> "ThetaTriple":
        a, b, c = values
        return ThetaTriple(Theta(float(a)), Theta(float(b)), Theta(float(c)), role)

    def values(self) -> tuple[float, float, float]:
        return (self.t1.value, self.t2.value, self.t3.value)


@dataclass(frozen=True)
class EllipticAngles:
    """Elliptic reparametrization of a triple: tau_i = F(theta_i, m) in (0, K)
    and theta'_i = pi tau_i / (2 K) in (0, pi/2)."""

    mod: Modulus
    taus: tuple[float, float, float]
    theta_primes: tuple[float, float, float]
    role: str


def J_from_theta(t: Theta) -> float:
    """J = (1/2) ln((1 + sin theta)/cos theta) > 0."""
    v = t.value
    return 0.5 * math.log((1.0 + math.sin(v)) / math.cos(v))


def theta_from_J(J: float) -> Theta:
    """Inverse of J_from_theta; uses tan(theta/2) = tanh(J)."""
    if not J > 0:
        raise DomainError(f"coupling constant must be positive, got {J}")
    return Theta(2.0 * math.atan(math.tanh(J)))


def x_from_theta(t: Theta) -> float:
    """x = tanh J = tan(theta/2), in (0, 1)."""
    return math.tan(t.value / 2.0)


def theta_from_x(x: float) -> Theta:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x}")
    return Theta(2.0 * math.atan(x))


def kw_dual(t: Theta) -> Theta:
    """Kramers-Wannier dual angle pi/2 - theta."""
    return Theta(math.pi / 2 - t.value)


def _require_role(triple: ThetaTriple, role: str, op: str):
    if triple.role != role:
        raise ContractError(f"{op} expects a {role} triple, got {triple.role}")


def baxter_kprime(triple: ThetaTriple) -> float:
    """k' of the classical transformation, from x_i = tan(theta_i/2)."""
    _require_role(triple, TRIANGLE, "baxter_kprime")
    x1, x3, x5 = (math.tan(v / 2.0) for v in triple.values())
    num = (1 - x1 * x1) * (1 - x3 * x3) * (1 - x5 * x5)
    den = 4.0 * math.sqrt((1 + x1 * x3 * x5) * (x1 + x3 * x5)
                          * (x3 + x1 * x5) * (x5 + x1 * x3))
    return num / den


def star_from_triangle_baxter(triple: ThetaTriple) -> ThetaTriple:
    """theta_{i+3} = arctan(1/(k' tan theta_i)); pairs (1,4), (3,6), (5,2)."""
    _require_role(triple, TRIANGLE, "star_from_triangle_baxter")
    kp = baxter_kprime(triple)
    t1, t3, t5 = triple.values()
    th4 = math.atan(1.0 / (kp * math.tan(t1)))
    th6 = math.atan(1.0 / (kp * math.tan(t3)))
    th2 = math.atan(1.0 / (kp * math.tan(t5)))
    return ThetaTriple.of((th2, th4, th6), STAR)


def _acos_checked(v: float, what: str) -> float:
    if not 0.0 < v < 1.0:
        raise ConsistencyError(f"{what} = {v} outside (0, 1); inconsistent input triple")
    return math.acos(v)


def _asin_checked(v: float, what: str) -> float:
    if not 0.0 < v < 1.0:
        raise ConsistencyError(f"{what} = {v} outside (0, 1); inconsistent input triple")
    return math.asin(v)


def star_from_triangle_closed(triple: ThetaTriple) -> ThetaTriple:
    """cos(theta_i) = sin(t_{i+3}) cos(t_{i+1}) cos(t_{i+5}) /
    (sin(t_{i+3}) + sin(t_{i+1}) sin(t_{i+5})) for i in {2, 4, 6}, labels mod 6."""
    _require_role(triple, TRIANGLE, "star_from_triangle_closed")
    t1, t3, t5 = triple.values()

    def one(a, b, c):  # i+3 = a, i+1 = b, i+5 = c
        v = math.sin(a) * math.cos(b) * math.cos(c) / (math.sin(a) + math.sin(b) * math.sin(c))
        return _acos_checked(v, "cos(theta)")

    th2 = one(t5, t3, t1)
    th4 = one(t1, t5, t3)
    th6 = one(t3, t1, t5)
    return ThetaTriple.of((th2, th4, th6), STAR)


def triangle_from_star_closed(triple: ThetaTriple) -> ThetaTriple:
    """sin(theta_i) = cos(t_{i+3}) sin(t_{i+1}) sin(t_{i+5}) /
    (cos(t_{i+3}) + cos(t_{i+1}) cos(t_{i+5})) for i in {1, 3, 5}."""
    _require_role(triple, STAR, "triangle_from_star_closed")
    t2, t4, t6 = triple.values()

    def one(a, b, c):
        v = math.cos(a) * math.sin(b) * math.sin(c) / (math.cos(a) + math.cos(b) * math.cos(c))
        return _asin_checked(v, "sin(theta)")

    th1 = one(t4, t2, t6)
    th3 = one(t6, t4, t2)
    th5 = one(t2, t6, t4)
    return ThetaTriple.of((th1, th3, th5), TRIANGLE)


def solve_modulus(triple: ThetaTriple) -> Modulus:
    """The unique m < 1 with F(t1, m) + F(t3, m) + F(t5, m) = K(m).

    Bracketed on [-1, 0.999] first; the negative end expands geometrically to
    -1e6 and the positive end approaches 1 as 1 - 10^-j (the root exceeds
    0.999 whenever the angles are collectively large).  Residual < 1e-12.
    """
    _require_role(triple, TRIANGLE, "solve_modulus")
    ts = triple.values()

    def defect(m: float) -> float:
        mod = Modulus(m)
        return sum(incomplete_F(t, mod) for t in ts) - complete_K(mod)

    lo, hi = -1.0, 0.999
    f_lo, f_hi = defect(lo), defect(hi)
    while f_lo * f_hi > 0 and hi < 1.0 - 1e-14:
        hi = 1.0 - (1.0 - hi) / 10.0
        f_hi = defect(hi)
    while f_lo * f_hi > 0 and lo > -1e6:
        lo *= 2.0
        f_lo = defect(lo)
    if f_lo * f_hi > 0:
        raise NumericRangeError("modulus bracket exhausted; no sign change found")
    m = brentq(defect, lo, hi, xtol=1e-16, rtol=8.9e-16, maxiter=200)
    if abs(defect(m)) > 1e-12:
        raise NumericRangeError(f"modulus residual {defect(m)} above tolerance")
    return Modulus(m)


def elliptic_angles(triple: ThetaTriple, mod: Modulus | None = None) -> EllipticAngles:
    """tau_i = F(theta_i, m) and theta'_i = pi tau_i/(2K); for a triangle triple
    the modulus is the solve_modulus root, so theta'_1 + theta'_3 + theta'_5 = pi/2."""
    if mod is None:
        mod = solve_modulus(triple)
    K = complete_K(mod)
    taus = tuple(incomplete_F(t, mod) for t in triple.values())
    primes = tuple(math.pi * tau / (2.0 * K) for tau in taus)
    return EllipticAngles(mod, taus, primes, triple.role)


def star_from_triangle_elliptic(triple: ThetaTriple) -> ThetaTriple:
    """tau_{i+3} = K - tau_i in the elliptic angles (theta'_{i+3} = pi/2 - theta'_i)."""
    _require_role(triple, TRIANGLE, "star_from_triangle_elliptic")
    mod = solve_modulus(triple)
    K = complete_K(mod)
    t1, t3, t5 = triple.values()
    th4 = am(K - incomplete_F(t1, mod), mod)
    th6 = am(K - incomplete_F(t3, mod), mod)
    th2 = am(K - incomplete_F(t5, mod), mod)
    return ThetaTriple.of((th2, th4, th6), STAR)


ROUTES = ("baxter", "closed", "elliptic")


def star_from_triangle(triple: ThetaTriple, route: str = "closed") -> ThetaTriple:
    if route == "baxter":
        return star_from_triangle_baxter(triple)
    if route == "closed":
        return star_from_triangle_closed(triple)
    if route == "elliptic":
        return star_from_triangle_elliptic(triple)
    raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")


def triangle_from_star(triple: ThetaTriple, route: str = "closed") -> ThetaTriple:
    """Inverse transformation.  The closed route is direct; the other two
    reuse the forward maps through Kramers-Wannier duality, under which the
    star becomes a triangle (labels shift by 3, slots rotate by one)."""
    _require_role(triple, STAR, "triangle_from_star")
    if route == "closed":
        return triangle_from_star_closed(triple)
    if route in ("baxter", "elliptic"):
        # dual triple (pi/2 - theta) read as a triangle, labels j -> j+3
        dual = ThetaTriple.of([math.pi / 2 - v for v in triple.values()], TRIANGLE)
        out = star_from_triangle(dual, route)  # star triple in dual land
        o = [math.pi / 2 - v for v in out.values()]
        # undo the label shift: dual slots (1,2,3) carry original labels (3,5,1)
        return ThetaTriple.of((o[2], o[0], o[1]), TRIANGLE)
    raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")
