"""Star-triangle transformation: three routes, duality, round trips, entry identities."""

import math

import numpy as np
import pytest

from alphaembed.elliptic import complete_K, incomplete_F
from alphaembed.errors import ConsistencyError, ContractError, DomainError
from alphaembed.ising import (
    STAR,
    TRIANGLE,
    Theta,
    ThetaTriple,
    J_from_theta,
    baxter_kprime,
    elliptic_angles,
    kw_dual,
    solve_modulus,
    star_from_triangle,
    star_from_triangle_baxter,
    star_from_triangle_closed,
    star_from_triangle_elliptic,
    theta_from_J,
    theta_from_x,
    triangle_from_star,
    triangle_from_star_closed,
    x_from_theta,
)

PI6 = ThetaTriple.of((math.pi / 6,) * 3, TRIANGLE)
PI4 = ThetaTriple.of((math.pi / 4,) * 3, TRIANGLE)


def _random_triple(rng, lo=0.05, role=TRIANGLE):
    return ThetaTriple.of(rng.uniform(lo, math.pi / 2 - lo, 3), role)


def test_theta_J_conversions():
    t = Theta(math.pi / 6)
    assert J_from_theta(t) == pytest.approx(0.5 * math.log(1.5 / (math.sqrt(3) / 2)), abs=1e-15)
    assert J_from_theta(t) == pytest.approx(0.25 * math.log(3.0), abs=1e-15)
    rng = np.random.default_rng(0)
    for v in rng.uniform(0.01, math.pi / 2 - 0.01, 50):
        assert theta_from_J(J_from_theta(Theta(v))).value == pytest.approx(v, abs=1e-13)
    # J -> 0+ gives theta -> 0+
    assert theta_from_J(1e-9).value == pytest.approx(2e-9, rel=1e-6)
    with pytest.raises(DomainError):
        theta_from_J(-1.0)


def test_x_conversions():
    assert x_from_theta(Theta(math.pi / 6)) == pytest.approx(math.tan(math.pi / 12), abs=1e-15)
    assert x_from_theta(Theta(math.pi / 2 - 1e-9)) == pytest.approx(1.0, abs=1e-8)
    rng = np.random.default_rng(1)
    for v in rng.uniform(0.01, math.pi / 2 - 0.01, 50):
        t = Theta(v)
        assert math.tanh(J_from_theta(t)) == pytest.approx(x_from_theta(t), abs=1e-13)
        assert theta_from_x(x_from_theta(t)).value == pytest.approx(v, abs=1e-13)


def test_kw_dual():
    t = Theta(math.pi / 6)
    assert kw_dual(t).value == pytest.approx(math.pi / 3)
    assert kw_dual(kw_dual(t)).value == pytest.approx(t.value)
    assert kw_dual(Theta(math.pi / 4)).value == pytest.approx(math.pi / 4)


def test_baxter_kprime_symmetric():
    assert baxter_kprime(PI6) == pytest.approx(1.0, abs=1e-12)
    # frozen from a 40-digit mpmath evaluation of the k' formula
    assert baxter_kprime(PI4) == pytest.approx(0.3063271475988609, abs=1e-14)
    rng = np.random.default_rng(2)
    for _ in range(50):
        assert baxter_kprime(_random_triple(rng)) > 0


def test_symmetric_checkpoint_all_routes():
    for route in ("baxter", "closed", "elliptic"):
        out = star_from_triangle(PI6, route)
        assert out.role == STAR
        for v in out.values():
            assert v == pytest.approx(math.pi / 3, abs=1e-12)


def test_closed_route_hand_value():
    out = star_from_triangle_closed(PI6)
    # cos(theta2) = (1/2 * 3/4)/(3/4) = 1/2 exactly
    assert out.values()[0] == pytest.approx(math.pi / 3, abs=1e-14)
    out4 = star_from_triangle_closed(PI4)
    # frozen from the mpmath oracle
    for v in out4.values():
        assert v == pytest.approx(1.27354496547369, abs=1e-12)


def test_product_relation():
    rng = np.random.default_rng(3)
    for _ in range(50):
        tri = _random_triple(rng)
        kp = baxter_kprime(tri)
        star = star_from_triangle_baxter(tri)
        t1, t3, t5 = tri.values()
        t2, t4, t6 = star.values()
        for a, b in ((t1, t4), (t3, t6), (t5, t2)):
            assert math.tan(a) * math.tan(b) == pytest.approx(1.0 / kp, rel=1e-11)


def test_routes_agree():
    rng = np.random.default_rng(4)
    for _ in range(25):
        tri = _random_triple(rng)
        outs = [star_from_triangle(tri, r).values() for r in ("baxter", "closed", "elliptic")]
        for o in outs[1:]:
            assert max(abs(a - b) for a, b in zip(outs[0], o)) < 1e-9


def test_round_trip_closed():
    rng = np.random.default_rng(5)
    for _ in range(200):
        tri = _random_triple(rng)
        back = triangle_from_star_closed(star_from_triangle_closed(tri))
        assert max(abs(a - b) for a, b in zip(tri.values(), back.values())) < 1e-10


def test_round_trip_other_routes():
    rng = np.random.default_rng(6)
    for _ in range(10):
        tri = _random_triple(rng)
        for route in ("baxter", "elliptic"):
            back = triangle_from_star(star_from_triangle(tri, route), route)
            assert max(abs(a - b) for a, b in zip(tri.values(), back.values())) < 1e-9


def test_kramers_wannier_conjugation():
    # triangle_from_star(t) equals the dual-transformed star route up to the
    # label rotation induced by duality (labels shift by 3, slots by one)
    rng = np.random.default_rng(7)
    for _ in range(50):
        star = _random_triple(rng, role=STAR)
        lhs = triangle_from_star_closed(star).values()
        dual_in = ThetaTriple.of([math.pi / 2 - v for v in star.values()], TRIANGLE)
        dual = [math.pi / 2 - v for v in star_from_triangle_closed(dual_in).values()]
        rhs = (dual[2], dual[0], dual[1])
        assert max(abs(a - b) for a, b in zip(lhs, rhs)) < 1e-10


def test_monotone_sanity_fixed_kprime():
    # at fixed k', increasing theta1 decreases theta4 = arctan(1/(k' tan theta1))
    kp = 0.7
    f = lambda t: math.atan(1.0 / (kp * math.tan(t)))
    assert f(0.6) > f(0.8) > f(1.0)


def test_solve_modulus():
    # theta sum = pi/2 -> m = 0
    assert abs(solve_modulus(PI6).m) < 1e-12
    # pi/4 symmetric: k' must match Baxter
    mod = solve_modulus(PI4)
    assert mod.m > 0
    assert math.sqrt(1 - mod.m) == pytest.approx(baxter_kprime(PI4), abs=1e-9)
    # theta sum < pi/2 -> m < 0
    small = ThetaTriple.of((0.3, 0.4, 0.5), TRIANGLE)
    assert solve_modulus(small).m < 0
    rng = np.random.default_rng(8)
    for _ in range(10):
        tri = _random_triple(rng)
        mod = solve_modulus(tri)
        K = complete_K(mod)
        assert sum(incomplete_F(t, mod) for t in tri.values()) == pytest.approx(K, abs=1e-12)
        assert math.sqrt(1 - mod.m) == pytest.approx(baxter_kprime(tri), abs=1e-9)


def test_solve_modulus_extreme_triple():
    # collectively large angles push m beyond the spec's initial 0.999 bracket
    tri = ThetaTriple.of((1.5, 1.45, 1.4), TRIANGLE)
    mod = solve_modulus(tri)
    assert 0.999 < mod.m < 1.0
    star = star_from_triangle_elliptic(tri)
    ref = star_from_triangle_closed(tri)
    assert max(abs(a - b) for a, b in zip(star.values(), ref.values())) < 1e-9


def test_elliptic_angles_sum():
    rng = np.random.default_rng(9)
    for _ in range(10):
        tri = _random_triple(rng)
        ea = elliptic_angles(tri)
        assert sum(ea.theta_primes) == pytest.approx(math.pi / 2, abs=1e-11)
        assert sum(ea.taus) == pytest.approx(complete_K(ea.mod), abs=1e-11)
        star = star_from_triangle_elliptic(tri)
        ea_star = elliptic_angles(star, ea.mod)
        # tau_{i+3} = K - tau_i, pairing slots (1,4), (3,6), (5,2)
        K = complete_K(ea.mod)
        assert ea_star.taus[1] == pytest.approx(K - ea.taus[0], abs=1e-10)
        assert ea_star.taus[2] == pytest.approx(K - ea.taus[1], abs=1e-10)
        assert ea_star.taus[0] == pytest.approx(K - ea.taus[2], abs=1e-10)


def test_entry_identities():
    rng = np.random.default_rng(10)
    for _ in range(100):
        tri = _random_triple(rng)
        t1, t3, t5 = tri.values()
        t2, t4, t6 = star_from_triangle_closed(tri).values()
        lhs1 = 1 / (math.cos(t3) * math.tan(t4) * math.cos(t5)) \
            + math.tan(t5) / (math.cos(t1) * math.tan(t6))
        assert lhs1 == pytest.approx(1 / math.sin(t4), rel=1e-10)
        lhs2 = math.tan(t5) / (math.cos(t3) * math.tan(t4)) \
            + 1 / (math.cos(t1) * math.tan(t6) * math.cos(t5))
        assert lhs2 == pytest.approx(1 / math.sin(t6), rel=1e-10)


def test_role_guards():
    with pytest.raises(ContractError):
        baxter_kprime(ThetaTriple.of((0.5, 0.6, 0.7), STAR))
    with pytest.raises(ContractError):
        triangle_from_star_closed(PI6)
    with pytest.raises(DomainError):
        Theta(0.0)
    with pytest.raises(DomainError):
        Theta(math.pi / 2)


def test_closed_route_rejects_inconsistent():
    # a "star" triple that cannot arise from any triangle makes the closed
    # inverse formula leave (0, 1): sin(theta) formula exceeding 1
    bad = ThetaTriple.of((1.569, 1.569, 1.569), STAR)
    with pytest.raises(ConsistencyError):
        triangle_from_star_closed(bad)
