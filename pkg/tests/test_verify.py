import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minqube.cubature import gauss_rule_omega, minimal_rule_g
from minqube.errors import InvalidParameter
from minqube.orthopoly1d import WeightSpec1D, shifted_laguerre_moments
from minqube.verify import (
    DensityEvaluator,
    common_zero_check,
    exactness_report,
    integrate_g,
    oracle_moment_g,
    oracle_moment_g_bruteforce,
    oracle_moment_omega,
    closed_form_discrepancy,
    sharpness_check,
    verify_rule,
)


@pytest.mark.parametrize("gamma,i,j,expected", [
    (-0.5, 0, 0, 0.5),
    (-0.5, 1, 0, 2.0),
    (0.5, 0, 0, 1.0),
])
def test_oracle_omega_examples(w0, gamma, i, j, expected):
    assert oracle_moment_omega(w0, gamma, i, j) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize("i,j,expected", [(1, 0, 0.0), (2, 0, 1.25), (1, 1, 1.0), (0, 2, 1.25)])
def test_oracle_g_examples(w0, i, j, expected):
    assert oracle_moment_g(w0, -0.5, i, j) == pytest.approx(expected, abs=1e-13)


def test_oracle_g_fourth_moment(w0):
    # orbit mean of x^4 is (s^4 + t^4)/2 with s^4 + t^4 = (1 + x1 x2)^2 - (x1 + x2)^2/2;
    # exponential moments 1, 2, 5 give E = 34 - 9 = 25 and 0.5 * 25 / 2 = 6.25
    assert oracle_moment_g(w0, -0.5, 4, 0) == pytest.approx(6.25, rel=1e-13)


@settings(max_examples=30, deadline=None)
@given(alpha=st.floats(-0.5, 4.0), i=st.integers(0, 3), j=st.integers(0, 3))
def test_oracle_omega_closed_form_gamma_minus_half(alpha, i, j):
    # u^i v^j = (x1 + x2)^i (x1 x2)^j expands into products of 1D moments
    w = WeightSpec1D.shifted_laguerre(alpha)
    mu = shifted_laguerre_moments(alpha, i + j)
    exact = 0.5 * sum(math.comb(i, a) * mu[a + j] * mu[i - a + j] for a in range(i + 1))
    assert oracle_moment_omega(w, -0.5, i, j) == pytest.approx(exact, rel=1e-12)


def test_oracle_rejects_bad_input(w0):
    with pytest.raises(InvalidParameter):
        oracle_moment_g(w0, 0.0, 0, 0)
    with pytest.raises(InvalidParameter):
        oracle_moment_omega(w0, -0.5, -1, 0)


def test_density_matches_orbit_integral_mass():
    # the unnormalized G density integrates to the oracle mass / c_w^2
    d = DensityEvaluator(0.0, -0.5)
    assert d.c_w == 1.0
    assert np.isfinite(d.g_hyperbolic(0.0, 0.0))
    with pytest.raises(InvalidParameter):
        DensityEvaluator(-1.0, -0.5)


@pytest.mark.parametrize("gamma,i,j,tol,expected", [
    (-0.5, 0, 0, 1e-8, 0.5),
    (-0.5, 2, 0, 1e-8, 1.25),
])
def test_bruteforce_examples(w0, gamma, i, j, tol, expected):
    got = oracle_moment_g_bruteforce(w0, gamma, i, j, 40.0, tol)
    assert got == pytest.approx(expected, abs=tol)


def test_bruteforce_plus_half(w0):
    got = oracle_moment_g_bruteforce(w0, 0.5, 0, 0, 40.0, 1e-7)
    assert got == pytest.approx(oracle_moment_g(w0, 0.5, 0, 0), abs=1e-6)


def test_bruteforce_tail_check(w0):
    with pytest.raises(InvalidParameter):
        oracle_moment_g_bruteforce(w0, -0.5, 0, 0, 5.0, 1e-8)
    with pytest.raises(InvalidParameter):
        oracle_moment_g_bruteforce(WeightSpec1D.custom(w0.recurrence(3)), -0.5, 0, 0)


def test_integrate_g_is_orbit_invariant(w0):
    f = lambda x, y: x ** 3 * y + 2 * x * y ** 5
    g = lambda x, y: y ** 3 * x + 2 * y * x ** 5
    assert integrate_g(w0, -0.5, f, 6) == pytest.approx(integrate_g(w0, -0.5, g, 6), rel=1e-14)


def test_report_g_n1(w0):
    rep = exactness_report(minimal_rule_g(w0, -0.5, 1), 5, 1e-9)
    assert rep.achieved_degree == 3
    assert rep.witness["degree"] == 4
    assert rep.passed == [True, True, True, True, False, True]
    assert rep.to_dict()["achieved_degree"] == 3


def test_report_x4_values(w0):
    r = minimal_rule_g(w0, -0.5, 1)
    assert r(lambda x, y: x ** 4) == pytest.approx(4.25)
    assert oracle_moment_g(w0, -0.5, 4, 0) == pytest.approx(6.25)


def test_report_omega_n1(w0):
    r = gauss_rule_omega(w0, -0.5, 1)
    assert exactness_report(r, 3, 1e-9).achieved_degree == 1
    assert r(lambda u, v: u) == pytest.approx(oracle_moment_omega(w0, -0.5, 1, 0))


def test_report_orthonormal_basis_option(w0):
    rep = exactness_report(minimal_rule_g(w0, -0.5, 2), 9, basis="orthonormal")
    assert rep.achieved_degree >= 7 and rep.basis == "orthonormal"
    with pytest.raises(InvalidParameter):
        exactness_report(minimal_rule_g(w0, -0.5, 2), 9, basis="chebyshev")


def test_g_plus_half_degree_measurement(w0):
    rep = exactness_report(minimal_rule_g(w0, 0.5, 2), 7, 1e-9)
    assert rep.achieved_degree == 3
    # degree 4 fails; odd degree 5 passes because both sides vanish by symmetry
    assert rep.passed[4] is False and rep.passed[5] is True


@pytest.mark.parametrize("rule_fn,gamma,n", [
    (minimal_rule_g, -0.5, 1), (minimal_rule_g, -0.5, 3), (gauss_rule_omega, -0.5, 1),
    (gauss_rule_omega, -0.5, 3),
])
def test_sharpness(w0, rule_fn, gamma, n):
    r = rule_fn(w0, gamma, n)
    rep = exactness_report(r, r.claimed_degree + 2)
    wit = sharpness_check(r.with_verified_degree(rep.achieved_degree), rep)
    assert wit.degree == rep.achieved_degree + 1
    assert wit.relative_error >= 1e-5
    assert abs(wit.rule_value) < 1e-10 * abs(wit.oracle_value)


def test_common_zeros(w0):
    res = common_zero_check(minimal_rule_g(w0, -0.5, 1))
    assert res.residual <= 1e-12 and res.count == res.expected_count == 2
    res = common_zero_check(gauss_rule_omega(w0, -0.5, 2))
    assert res.residual <= 1e-10 and res.count == 3
    wrong = common_zero_check(minimal_rule_g(w0, -0.5, 1), degree=4)
    assert wrong.residual > 1e-3


def test_closed_form_discrepancy_report():
    out = closed_form_discrepancy(0.5, 2)
    for k, row in out["family1"].items():
        assert row["shifted"]["relative_residual"] < 1e-10
        assert row["unshifted"]["relative_residual"] > 1e-3
    assert set(out["family2"]) == {0, 1}


def test_verify_rule_record(w0):
    rec = verify_rule(minimal_rule_g(w0, -0.5, 2))
    assert rec["achieved_degree"] == 7 and rec["attains_lower_bound"]
    assert rec["node_count"] == rec["lower_bound_nodes"] == 12
    assert rec["sharpness_witness"]["degree"] == 8
    assert rec["common_zero_residual"] <= 1e-12
