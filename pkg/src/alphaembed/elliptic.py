"""Jacobi elliptic kernel: F, K, am, sn/cn/dn and the pq ratio family.

Everything is parametrized by m = k^2 with m < 1, so an imaginary modulus k
is simply m < 0 and all arithmetic stays real.  The incomplete integral of
the first kind F(theta, m) = int_0^theta dt / sqrt(1 - m sin^2 t) is computed
by adaptive Gauss-Kronrod quadrature after reducing theta modulo pi (one
period costs 2K); the quarter-period K comes from the arithmetic-geometric
mean.  am is the inverse of F on a monotone segment, solved by safeguarded
Newton.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from scipy.integrate import quad as _gk_quad

from .errors import DomainError

#: Absolute quadrature target for the incomplete integral.
F_QUAD_TOL = 1e-13

#: |qn| below this is reported as a pole of pq.
POLE_EPS = 1e-14


@dataclass(frozen=True)
class Modulus:
    """m = k^2 < 1; covers k in [0,1) (m >= 0) and k imaginary (m < 0)."""

    m: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and self.m < 1.0):
            raise DomainError(f"elliptic parameter m must satisfy m < 1, got {self.m}")

    @property
    def k_prime(self) -> float:
        return math.sqrt(1.0 - self.m)


@dataclass(frozen=True)
class PoleSignal:
    """Tagged result of pq at a zero of the denominator function."""

    denominator: str
    tau: float


def complete_K(mod: Modulus) -> float:
    """Quarter-period K(m) by the arithmetic-geometric mean; K(0) = pi/2."""
    a, b = 1.0, mod.k_prime
    for _ in range(60):
        if abs(a - b) <= 4e-16 * max(a, b):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def incomplete_F(theta: float, mod: Modulus) -> float:
    """F(theta, m), strictly increasing in theta, by adaptive quadrature.

    Large arguments are reduced with F(theta + pi) = F(theta) + 2K.
    """
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    m = mod.m
    n = round(theta / math.pi)
    rest = theta - n * math.pi  # in [-pi/2, pi/2]
    val = _gk_quad(lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
                   0.0, rest, epsabs=F_QUAD_TOL, epsrel=1e-12, limit=200)[0]
    if n != 0:
        val += 2.0 * n * complete_K(mod)
    return val


def _dF(theta: float, m: float) -> float:
    return 1.0 / math.sqrt(1.0 - m * math.sin(theta) ** 2)


def am(tau: float, mod: Modulus) -> float:
    """Inverse of F(., m): the unique theta with F(theta, m) = tau.

    tau is reduced modulo 2K onto the monotone segment [-K, K] (where the
    amplitude lies in [-pi/2, pi/2]) and solved by Newton with a bisection
    safeguard; |F(am(tau)) - tau| < 1e-12.
    """
    if not math.isfinite(tau):
        raise DomainError("tau must be finite")
    K = complete_K(mod)
    n = round(tau / (2.0 * K))
    t0 = tau - 2.0 * n * K  # in [-K, K]
    lo, hi = -math.pi / 2, math.pi / 2
    theta = t0 * (math.pi / 2) / K
    for _ in range(100):
        r = incomplete_F(theta, mod) - t0
        if abs(r) < 1e-13:
            break
        if r > 0:
            hi = theta
        else:
            lo = theta
        step = r * math.sqrt(max(1.0 - mod.m * math.sin(theta) ** 2, 0.0))
        theta -= step
        if not (lo < theta < hi):
            theta = 0.5 * (lo + hi)
    return theta + n * math.pi


def sn(tau: float, mod: Modulus) -> float:
    return math.sin(am(tau, mod))


def cn(tau: float, mod: Modulus) -> float:
    return math.cos(am(tau, mod))


def dn(tau: float, mod: Modulus) -> float:
    s = math.sin(am(tau, mod))
    return math.sqrt(1.0 - mod.m * s * s)


def _pn(letter: str, tau: float, mod: Modulus) -> float:
    if letter == "s":
        return sn(tau, mod)
    if letter == "c":
        return cn(tau, mod)
    if letter == "d":
        return dn(tau, mod)
    if letter == "n":
        return 1.0
    raise DomainError(f"unknown elliptic letter {letter!r}; use c, s, d or n")


def pq(p: str, q: str, tau: float, mod: Modulus) -> Union[float, PoleSignal]:
    """The ratio pn/qn with the convention nn = 1 (e.g. nc = 1/cn, sc = sn/cn).

    Returns a PoleSignal instead of overflowing when qn vanishes.
    """
    den = _pn(q, tau, mod)
    if abs(den) < POLE_EPS:
        return PoleSignal(denominator=q + "n", tau=tau)
    return _pn(p, tau, mod) / den


def quarter_shift_residuals(tau: float, mod: Modulus) -> tuple[float, float, float]:
    """Residuals of cn(K-t) = k' sd(t), sn(K-t) = cd(t), dn(K-t) = k' nd(t)."""
    K = complete_K(mod)
    kp = mod.k_prime
    d = dn(tau, mod)  # dn >= k' > 0: sd, cd, nd have no poles
    r_cn = cn(K - tau, mod) - kp * sn(tau, mod) / d
    r_sn = sn(K - tau, mod) - cn(tau, mod) / d
    r_dn = dn(K - tau, mod) - kp / d
    return (r_cn, r_sn, r_dn)


def addition_residual(tau1: float, tau2: float, mod: Modulus) -> float:
    """cn(t+t') + sn(t) sn(t') dn(t+t') - cn(t) cn(t')."""
    return (cn(tau1 + tau2, mod)
            + sn(tau1, mod) * sn(tau2, mod) * dn(tau1 + tau2, mod)
            - cn(tau1, mod) * cn(tau2, mod))
