import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import example, given, strategies as st

from coulomb4 import DomainError, PotentialParams, closed_form_energy, recursion_polynomial
from coulomb4.heun import (
    DchParams,
    dch_parameters,
    dch_series,
    evaluate_with_convergence,
    polynomial_termination_check,
    rescaled_lie_coefficients,
    series_ode_residual,
)
from coulomb4.ordinary_qes import solve_alpha2_roots
from coulomb4.checks import proportionality_gap
from strategies import admissible_triples


def test_parameters_by_hand():
    d = dch_parameters(PotentialParams(-1, 0, 0, 1), -1.0)
    assert (d.rho, d.eta, d.omega) == (2.0, 4.0, 0.5)


def test_omega_cancels_without_alpha3():
    eps = -0.09
    d = dch_parameters(PotentialParams(-2 * math.sqrt(-eps), 0, 0, 0.7), eps)
    assert d.omega == pytest.approx(0.0, abs=1e-15)


def test_parameters_need_negative_energy():
    with pytest.raises(DomainError):
        dch_parameters(PotentialParams(-1, 0, 0, 1), 0.0)


@given(admissible_triples(), st.floats(-2, 2), st.integers(0, 8))
def test_omega_quantisation(t, a2, n):
    p = PotentialParams(t[0], a2, t[1], t[2])
    assert dch_parameters(p, closed_form_energy(n, p)).omega == pytest.approx(-n, abs=1e-12 * max(1, n))


def test_series_by_hand():
    h = dch_series(DchParams(rho=2.0, eta=4.0, omega=0.5, lambda2=2.0), 2)
    assert h[0] == 1.0 and h[1] == 0.5 and h[2] == 0.0625


def test_series_first_term_vanishes_with_lambda2():
    assert dch_series(DchParams(2.0, 4.0, 0.5, 0.0), 3)[1] == 0.0


def test_series_rejects_zero_eta():
    with pytest.raises(ZeroDivisionError):
        dch_series(DchParams(2.0, 0.0, 0.5, 1.0), 3)


def test_closed_ground_state_terminates_at_degree_zero(ground_reference):
    p = ground_reference.closed_params()
    ok, res = polynomial_termination_check(dch_parameters(p, closed_form_energy(0, p)), 0)
    assert ok and res <= 1e-10


def test_half_integer_omega_never_terminates():
    d = DchParams(2.0, 4.0, 0.5, 2.0)
    assert not any(polynomial_termination_check(d, m)[0] for m in range(12))


def test_closed_excited_state_terminates_at_degree_one_only(excited_reference):
    p = excited_reference.closed_params()
    d = dch_parameters(p, closed_form_energy(1, p))
    assert polynomial_termination_check(d, 1)[0]
    assert not polynomial_termination_check(d, 0)[0]


@given(admissible_triples(min_delta=0.2, min_alpha4=0.05), st.integers(0, 2))
@example((-0.015625, -0.0625, 0.0625), 2)
def test_heun_and_lie_polynomials_are_proportional(t, n):
    a1, a3, a4 = t
    for a2 in solve_alpha2_roots(n, a1, a3, a4):
        p = PotentialParams(a1, a2, a3, a4)
        eps = closed_form_energy(n, p)
        d = dch_parameters(p, eps)
        c, _ = recursion_polynomial(n, p, eps)
        assert proportionality_gap(rescaled_lie_coefficients(d, eps, n), c) <= 1e-9
        h = dch_series(d, n + 1)
        # each step divides by eta, so a rounding-level error in lambda2 can
        # outgrow 1e-8 when eta is small; allow what such an error produces
        k = math.sqrt(-eps)
        shift = 4 * np.finfo(float).eps * (abs(a2) + a3**2 / (4 * a4**2) + abs(a3 / (2 * a4)) + 2 * a4 * k)
        moved = [dch_series(replace(d, lambda2=d.lambda2 + sgn), n + 1)[n + 1] for sgn in (-shift, shift)]
        assert abs(h[n + 1]) <= max(1e-8 * np.max(np.abs(h[: n + 1])), abs(moved[1] - moved[0]))


@given(
    st.floats(0.5, 4.0), st.floats(0.05, 3.0), st.floats(-3.0, 3.0), st.floats(-2.0, 2.0),
    st.integers(2, 40), st.floats(0.01, 5.0),
)
def test_truncation_residual_is_the_two_leftover_terms(rho, eta, omega, lam2, N, y):
    d = DchParams(rho, eta, omega, lam2)
    h = dch_series(d, N + 1)
    got = series_ode_residual(d, h[: N + 1], y)
    expected = -eta * (N + 1) * h[N + 1] * y**N - (N + omega) * h[N] * y ** (N + 1)
    scale = np.max(np.abs(h[: N + 2]) * np.maximum(1.0, y) ** (np.arange(N + 2) + 1)) * (1 + rho + eta + abs(omega) + abs(lam2) + N * N)
    assert abs(got - expected) <= 1e-11 * scale


def test_non_terminating_series_is_flagged_divergent():
    # generic parameters: coefficients grow factorially, partial sums do not settle
    d = DchParams(2.0, 0.5, 0.5, 0.3)
    h = dch_series(d, 60)
    assert abs(h[60]) > abs(h[30]) > 1.0
    _, converged = evaluate_with_convergence(d, 1.0)
    assert not converged


def test_exactly_terminating_series_is_flagged_convergent():
    # omega = -1 and lambda2 (lambda2 - rho) = eta give h_2 = h_3 = ... = 0 in exact arithmetic
    d = DchParams(rho=2.0, eta=3.0, omega=-1.0, lambda2=3.0)
    y = np.array([0.1, 1.0, 3.0])
    value, converged = evaluate_with_convergence(d, y, N=20)
    assert converged
    assert np.allclose(value, 1.0 + y, rtol=1e-15)


def test_rounded_termination_is_not_numerically_stable():
    # a closed n=1 set leaves h_2 at rounding level, which the recursion then amplifies
    p = PotentialParams(-0.2, 0.0, -0.0002, 0.0029)
    p = p.with_alpha2(solve_alpha2_roots(1, -0.2, -0.0002, 0.0029)[0])
    d = dch_parameters(p, closed_form_energy(1, p))
    h = dch_series(d, 40)
    assert abs(h[2]) <= 1e-8 * max(abs(h[0]), abs(h[1]))
    assert abs(h[40]) > abs(h[2])
