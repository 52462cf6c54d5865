import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from frozen_values import DSG
from genjac import (
    CaseTag,
    DomainError,
    DSGParams,
    NoSolutionError,
    Periodicity,
    chain_energy,
    classify,
    mirror_solution,
    ode_residual,
    potential,
    radius,
    solve,
    topological_charge,
)


def P(lam, mu, A=0.0, beta=1.0, x0=0.0):
    return DSGParams(mu, lam, beta, A, x0)


@pytest.mark.parametrize("tag,lam,mu,beta,A,R,E", DSG, ids=[f"{r[0]}-{i}" for i, r in enumerate(DSG)])
def test_frozen_period_and_energy(tag, lam, mu, beta, A, R, E):
    sol = solve(DSGParams(mu, lam, beta, A))
    assert sol.case_tag.value == tag
    assert sol.R == pytest.approx(R, rel=1e-13)
    assert sol.energy == pytest.approx(E, rel=1e-12)


@pytest.mark.parametrize("lam,mu,A,tag", [
    (4.0, 0.5, 0.5, "A1"), (4.0, 0.5, 0.0, "A2"), (4.0, 0.5, 1.0, "A3"),
    (2.0, 0.0, 1.0, "A3-SG"), (4.0, 0.5, 3.0, "A4"), (4.0, 0.5, -3.0, "A5"),
    (4.0, 0.5, -8.0, "A6"), (0.5, 4.0, 0.5, "B1"), (0.5, 4.0, 0.0, "B2"),
    (0.5, 4.0, -3.0, "B3"), (0.0, 1.0, -2.0, "B4"), (0.5, 4.0, -8.0, "B5"),
    (0.5, 4.0, -8.5078125, "B6"), (-1.0, -1.0, 1.0, "C"), (2.0, -1.0, 1.0, "D1"),
    (2.0, -1.0, -1.0, "D2"), (-4.0, 0.5, 0.5, "A1"),
])
def test_classification(lam, mu, A, tag):
    assert classify(P(lam, mu, A)).case_tag.value == tag


def test_boundary_band_snaps():
    trig = (4.0 - 2.0) ** 2 / 4.0
    assert classify(P(4.0, 0.5, trig * (1 + 1e-13))).case_tag is CaseTag.A3_TrigPoint
    assert classify(P(4.0, 0.5, trig * (1 + 1e-9))).case_tag is CaseTag.A4_ComplexModuli
    assert classify(P(4.0, 0.5, -8.0 * (1 - 1e-13))).case_tag is CaseTag.A6_ConstantEndpoint


@pytest.mark.parametrize("lam,mu,A", [
    (4.0, 0.5, -8.1),      # below the endpoint
    (4.0, 1.0, 0.0),       # lambda = 4 mu at A = 0
    (0.5, 4.0, -9.0),      # below the large-kink endpoint
    (-1.0, -1.0, -0.5),    # mu, lambda < 0 needs A > 0
    (2.0, -1.0, 0.0),
    (2.0, -1.0, -4.0),
])
def test_no_solution(lam, mu, A):
    with pytest.raises(NoSolutionError):
        solve(P(lam, mu, A))


@pytest.mark.parametrize("kw", [dict(beta=0.0), dict(beta=-1.0), dict(A=math.inf)])
def test_param_validation(kw):
    with pytest.raises(DomainError):
        DSGParams(0.5, 4.0, **kw)
    with pytest.raises(DomainError):
        DSGParams(0.0, 0.0)


def test_potential_minimum_is_zero():
    for lam, mu in ((4.0, 0.5), (0.5, 4.0), (-0.5, 4.0), (-1.0, -1.0), (2.0, -1.0), (2.0, 0.0)):
        phi = np.linspace(0, 4 * np.pi, 20001)
        v = potential(phi, P(lam, mu))
        assert v.min() == pytest.approx(0.0, abs=1e-6)
        assert v.min() >= -1e-15


def test_periodicity_labels():
    assert solve(P(4.0, 0.5, 0.5)).periodicity is Periodicity.QuasiPeriodic_4piOverBeta
    assert solve(P(4.0, 0.5, -1.0)).periodicity is Periodicity.Periodic_2R
    assert solve(P(4.0, 0.5, 0.0)).periodicity is Periodicity.Infinite
    assert math.isinf(radius(P(4.0, 0.5, 0.0)))


def test_endpoint_constant_solution():
    p = P(4.0, 0.5, -8.0)
    sol = solve(p)
    x = np.linspace(-3, 3, 7)
    assert np.allclose(sol.profile(x), 2 * np.pi)
    assert np.allclose(sol.density(x), 8.0)
    assert sol.R == pytest.approx(2 * np.pi / math.sqrt(6.0), rel=1e-15)


def test_endpoint_approach():
    # the chain flattens onto phi = 2 pi / beta as A -> -2 lambda
    R0 = 2 * math.pi / math.sqrt(6.0)
    prev = None
    for d in (1e-2, 1e-4, 1e-6):
        sol = solve(P(4.0, 0.5, -8.0 + d))
        x = np.linspace(0, 2 * sol.R, 201)
        dev = np.max(np.abs(sol.profile(x) - 2 * np.pi))
        assert abs(sol.R - R0) < 10 * d
        if prev is not None:
            assert dev < prev
        prev = dev
    assert prev < 1e-2


def test_charges():
    assert topological_charge(P(4.0, 0.5)) == pytest.approx(4 * math.pi)
    assert topological_charge(P(4.0, 0.5, beta=2.0)) == pytest.approx(2 * math.pi)
    q1, q2 = topological_charge(P(2.0, 1.0))
    assert q1 > q2
    assert q1 + q2 == pytest.approx(4 * math.pi)
    assert topological_charge(P(0.0, 1.0)) == pytest.approx((2 * math.pi, 2 * math.pi))
    # the single kink reaches its charge
    sol = solve(P(4.0, 0.5))
    assert sol.profile(60.0) - sol.profile(-60.0) == pytest.approx(4 * math.pi, abs=1e-9)
    with pytest.raises(DomainError):
        topological_charge(P(4.0, 0.5, 1.0))


def test_small_kink_charge_from_profile():
    p = P(2.0, 1.0)
    sol = mirror_solution(p)
    q2 = topological_charge(p)[1]
    assert abs(sol.profile(80.0) - sol.profile(-80.0)) == pytest.approx(q2, abs=1e-9)


def test_mirror_solution():
    p = P(0.5, 4.0, -3.0)
    sol = mirror_solution(p)
    x = np.linspace(0, 2 * sol.R, 200)
    assert np.max(ode_residual(sol, x)) < 1e-8
    other = solve(P(-0.5, 4.0, -3.0))
    assert np.allclose(sol.profile(x), other.profile(x) - 2 * np.pi, atol=1e-14)
    with pytest.raises(DomainError):
        mirror_solution(P(4.0, 0.5, 0.5))
    with pytest.raises(NoSolutionError):
        mirror_solution(P(0.5, 4.0, -8.0))


def test_x0_shift():
    a = solve(P(4.0, 0.5, 0.5))
    b = solve(P(4.0, 0.5, 0.5, x0=1.3))
    x = np.linspace(-2, 2, 9)
    assert np.allclose(b.profile(x + 1.3), a.profile(x), atol=1e-14)


def test_beta_scaling():
    # phi(x; beta) = phi(x; 1) / beta when A scales as 1 / beta^2
    a = solve(P(4.0, 0.5, 0.5))
    b = solve(P(4.0, 0.5, 0.5 / 4.0, beta=2.0))
    x = np.linspace(-3, 3, 13)
    assert np.allclose(b.profile(x), a.profile(x) / 2.0, atol=1e-13)
    assert b.R == pytest.approx(a.R, rel=1e-14)
    assert b.energy == pytest.approx(a.energy / 4.0, rel=1e-12)


def test_energy_methods():
    p = P(4.0, 0.5, 0.5)
    assert chain_energy(p, "closed") == pytest.approx(chain_energy(p, "numeric"), rel=1e-12)
    with pytest.raises(DomainError):
        chain_energy(P(0.5, 4.0, 0.5), "closed")
    with pytest.raises(DomainError):
        chain_energy(P(4.0, 0.5, 0.0))


def test_trig_point_continuity():
    trig = 1.0
    e = [chain_energy(P(4.0, 0.5, trig + d)) for d in (-1e-7, 0.0, 1e-7)]
    assert e[0] == pytest.approx(e[1], rel=1e-6)
    assert e[2] == pytest.approx(e[1], rel=1e-6)


case_a = st.tuples(st.floats(0.05, 3.0), st.floats(1.5, 20.0), st.floats(0.5, 2.0))


@given(case_a, st.floats(-0.999, 3.0))
def test_case_a_residual_property(pmb, frac):
    mu, ratio_, beta = pmb
    lam = 4 * mu * ratio_
    # frac < 0 spans the kink/anti-kink band, frac > 0 the chains
    A = frac * 2 * lam / beta ** 2 if frac < 0 else frac * (lam - 4 * mu) ** 2 / (8 * mu) / beta ** 2
    assume(abs(A) > 1e-6)
    sol = solve(DSGParams(mu, lam, beta, A))
    x = np.linspace(0, 2 * sol.R, 64)
    scale = 1.0 + abs(A) + 2 * lam / beta ** 2
    assert np.max(ode_residual(sol, x)) < 1e-9 * scale


@given(st.floats(0.1, 5.0), st.floats(-0.95, 0.95), st.floats(-1.0, 1.0))
def test_case_b_residual_property(mu, r, frac):
    lam = 4 * mu * r
    v1 = -(lam + 4 * mu) ** 2 / (8 * mu)
    v2 = -(lam - 4 * mu) ** 2 / (8 * mu)
    A = frac * 5.0 if frac > 0 else -frac * min(v1, v2) * 0.999
    assume(abs(A) > 1e-6)
    sol = solve(P(lam, mu, A))
    x = np.linspace(0, 2 * sol.R, 64)
    assert np.max(ode_residual(sol, x)) < 1e-9 * (1.0 + abs(A) + 8 * mu)


@given(st.floats(0.1, 5.0), st.floats(0.05, 10.0))
def test_quasi_periodic_winding(mu, A):
    sol = solve(P(4 * mu * 1.7, mu, A))
    x = np.linspace(-1, 1, 9)
    assert np.allclose(sol.profile(x + sol.R) - sol.profile(x), 4 * np.pi, atol=1e-10)


@given(st.floats(0.01, 0.99))
def test_case_a_period_decreases_with_a(f):
    # between the single kink and the trigonometric point
    lam, mu = 4.0, 0.5
    trig = (lam - 4 * mu) ** 2 / (8 * mu)
    assert radius(P(lam, mu, f * trig)) > radius(P(lam, mu, min(f + 0.01, 1.0) * trig))
