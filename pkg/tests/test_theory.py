import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles as O
from softhappy import theory as T
from softhappy.exceptions import ParameterError

EX = dict(n=1000, k=20, p=0.7, q=0.06)


def test_frozen_values_match_fresh_oracle():
    assert float(O.mp_phi(20, 0.7, 0.06, 0.3)) == pytest.approx(O.PHI_EXAMPLE, rel=1e-12)
    assert float(O.mp_xi(1000, 20, 0.7, 0.06, 1e-6)) == pytest.approx(O.XI_EXAMPLE, rel=1e-12)
    assert float(O.mp_xi_tilde(2, 0.5, 0.1)) == pytest.approx(O.XI_TILDE_K2, rel=1e-12)


def test_expected_degree():
    assert T.expected_degree(**EX) == pytest.approx(O.EXPECTED_DEGREE_EXAMPLE, abs=1e-9)
    assert T.expected_degree(10, 10, 0.5, 0.0) == 0.0
    n, k, p = 100, 4, 0.3
    assert T.expected_degree(n, k, p, p) == pytest.approx((n / k - 1) * p + (k - 1) / k * n * p)


def test_inequality_worked_example():
    er = math.exp(0.3)
    lhs = 0.06 * 19 * (er - 1) + 0.7 * (er - math.e)
    assert lhs == pytest.approx(O.LHS_EXAMPLE, abs=1e-12)
    assert 0.02 * math.log(1e-6) == pytest.approx(O.RHS_EXAMPLE, abs=1e-12)
    assert T.theorem1_inequality_holds(**EX, rho=0.3, epsilon=1e-6)


@given(st.floats(1e-9, 1 - 1e-9))
def test_inequality_fails_at_rho_one(eps):
    assert not T.theorem1_inequality_holds(**EX, rho=1.0, epsilon=eps)


def test_inequality_near_epsilon_one():
    assert T.theorem1_inequality_holds(1000, 2, 0.9, 0.01, 0.1, 1 - 1e-12)


def test_inequality_domain_errors():
    with pytest.raises(ParameterError):
        T.theorem1_inequality_holds(**EX, rho=0.3, epsilon=1.0)
    with pytest.raises(ParameterError):
        T.theorem1_inequality_holds(**EX, rho=0.0, epsilon=0.5)


def test_phi_examples():
    assert T.phi(20, 0.7, 0.06, 0.3) == pytest.approx(O.PHI_EXAMPLE, abs=1e-12)
    assert T.phi(20, 0.7, 0.06, 1.0) == pytest.approx(0.06 * 19 * (math.e - 1) / 20)
    assert T.phi(5, 0.4, 0.0, 0.5) < 0


def test_epsilon_tilde_examples():
    assert T.epsilon_tilde(**EX, rho=0.3) == pytest.approx(O.EPS_TILDE_EXAMPLE, rel=1e-9)
    # with q = 0, phi vanishes at rho = 1
    assert T.epsilon_tilde(50, 3, 0.5, 0.0, 1.0) == 1.0


@given(
    st.integers(2, 5000), st.integers(2, 30), st.floats(0.01, 1.0), st.floats(0, 1), st.floats(0, 1)
)
def test_epsilon_tilde_is_exp_n_phi(n, k, p, qf, rho):
    q = qf * p
    x = n * T.phi(k, p, q, rho)
    assume(x < 700)
    assert T.epsilon_tilde(n, k, p, q, rho) == pytest.approx(math.exp(x), rel=1e-9)


def test_prob_lower_bound():
    assert T.prob_lower_bound(1000, O.EPS_TILDE_EXAMPLE) == pytest.approx(O.BOUND_EXAMPLE, abs=1e-15)
    assert T.prob_lower_bound(1000, 1.0) == 0.0
    assert T.prob_lower_bound(1000, 3.5) == 0.0
    n = 10**6
    assert T.prob_lower_bound(n, 1 / n) == pytest.approx(math.exp(-1), abs=1e-6)


@given(st.integers(1, 10**6), st.floats(0, 0.999))
def test_prob_lower_bound_matches_oracle(n, e):
    assert T.prob_lower_bound(n, e) == pytest.approx(float(O.mp_bound(n, e)), abs=1e-12)


def test_xi_examples():
    assert T.xi(**EX, epsilon=1e-6) == pytest.approx(O.XI_EXAMPLE, abs=1e-12)
    assert T.xi(10, 20, 0.7, 0.06, 0.01) == 0.0


def test_xi_tilde_examples():
    assert T.xi_tilde(20, 0.7, 0.06) == pytest.approx(O.XI_TILDE_EXAMPLE, abs=1e-12)
    assert math.log((0.7 * math.e + 19 * 0.06) / 1.84) == pytest.approx(O.XI_TILDE_LOG_BRANCH)
    assert T.xi_tilde(5, 0.3, 0.0) == pytest.approx(1.0)
    assert T.xi_tilde(2, 0.5, 0.1) == pytest.approx(O.XI_TILDE_K2, abs=1e-12)


def test_default_epsilon():
    assert T.xi(**EX) == T.xi(**EX, epsilon=1000**-2)
    assert T.threshold_report(**EX, rho=0.3).epsilon_used == 1e-6


params = st.tuples(
    st.integers(2, 30), st.floats(0.01, 1.0), st.floats(0.001, 0.999)
).map(lambda t: (t[0], t[1], t[1] * t[2]))


@given(st.integers(1, 10**7), params, st.floats(1e-12, 0.5))
def test_xi_matches_oracle_and_bounds(n, kpq, eps):
    k, p, q = kpq
    x = T.xi(n, k, p, q, eps)
    assert x == pytest.approx(float(O.mp_xi(n, k, p, q, eps)), abs=1e-9)
    assert 0.0 <= x <= 1.0
    assert x <= p / (p + (k - 1) * q) + 1e-15


@given(params, st.floats(1e-12, 0.5), st.integers(1, 10**6), st.integers(1, 10**6))
def test_xi_non_decreasing_in_n(kpq, eps, n1, n2):
    k, p, q = kpq
    lo, hi = sorted((n1, n2))
    assert T.xi(lo, k, p, q, eps) <= T.xi(hi, k, p, q, eps) + 1e-12


@given(params)
def test_xi_tends_to_xi_tilde(kpq):
    k, p, q = kpq
    assert T.xi(10**9, k, p, q, 1e-6) == pytest.approx(T.xi_tilde(k, p, q), abs=1e-6)


@given(params, st.floats(0, 1))
def test_phi_sign_matches_log_threshold(kpq, rho):
    k, p, q = kpq
    cut = math.log((p * math.e + (k - 1) * q) / (p + (k - 1) * q))
    assume(abs(rho - cut) > 1e-9)
    assert (T.phi(k, p, q, rho) < 0) == (rho < cut)


@given(st.integers(2, 10**5), params, st.floats(0.001, 1), st.floats(1e-12, 0.99))
def test_inequality_equivalent_to_n_phi_below_log_eps(n, kpq, rho, eps):
    k, p, q = kpq
    lhs = n * T.phi(k, p, q, rho)
    assume(abs(lhs - math.log(eps)) > 1e-9 * max(1.0, abs(lhs)))
    assert T.theorem1_inequality_holds(n, k, p, q, rho, eps) == (lhs < math.log(eps))


def test_threshold_report_fields():
    r = T.threshold_report(**EX, rho=0.3)
    assert r.xi_tilde == pytest.approx(0.3804, abs=5e-4)
    assert r.inequality_holds
    assert r.expected_degree == pytest.approx(91.3)
    assert not T.threshold_report(**EX, rho=1.0).inequality_holds
