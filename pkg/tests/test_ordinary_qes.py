import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from coulomb4 import (
    ConstraintViolationError,
    DomainError,
    PotentialParams,
    REFERENCE_SETS,
    SingularDenominatorError,
    build_wavefunction,
    closed_form_energy,
    evaluate_wavefunction,
    first_excited_constraint_residual,
    ground_constraint_residual,
    lambda_coeffs,
    qes_determinant_residual,
    recursion_polynomial,
    solve_alpha2_ground,
    solve_constraint_n1,
    solve_ordinary,
)
from coulomb4.ordinary_qes import physical_node_position, recursion_matrix, solve_alpha2_roots
from coulomb4.oracle import count_nodes
from strategies import admissible_triples


# ---- energies

@given(st.floats(-3, -1e-3), st.floats(1e-3, 3), st.integers(0, 6))
def test_energy_is_hydrogen_like_without_alpha3(a1, a4, n):
    p = PotentialParams(a1, 0.0, 0.0, a4)
    assert closed_form_energy(n, p) == pytest.approx(-a1**2 / (4 * (n + 1) ** 2), rel=1e-14)


def test_reference_energies():
    assert closed_form_energy(0, REFERENCE_SETS["G1"].params) == pytest.approx(-0.3468, abs=5e-5)
    assert closed_form_energy(1, REFERENCE_SETS["E1"].params) == pytest.approx(-2.589e-3, rel=5e-4)


def test_energy_pole_is_rejected():
    # alpha3 = -2(n+1) alpha4 makes delta negative for n >= 1, so only n = 0 reaches the pole check
    with pytest.raises((SingularDenominatorError, DomainError)):
        closed_form_energy(0, PotentialParams(-0.1, 0.0, -0.02, 0.01))
    with pytest.raises(DomainError):
        closed_form_energy(1, PotentialParams(-0.1, 0.0, -0.04, 0.01))


@given(admissible_triples(), st.integers(0, 8))
def test_energies_increase_towards_zero(t, n):
    p = PotentialParams(t[0], 0.0, t[1], t[2])
    e0, e1 = closed_form_energy(n, p), closed_form_energy(n + 1, p)
    assert e0 < e1 < 0


# ---- lambda pair

def test_lambda_by_hand():
    lp = lambda_coeffs(PotentialParams(-1, 0, 0, 1), -1.0)
    assert (lp.lambda1, lp.lambda2) == (1.0, 2.0)


def test_lambda_needs_negative_energy():
    with pytest.raises(DomainError):
        lambda_coeffs(PotentialParams(-1, 0, 0, 1), 0.0)


@given(admissible_triples(), st.integers(0, 6))
def test_lambda1_quantisation(t, n):
    p = PotentialParams(t[0], 0.3, t[1], t[2])
    eps = closed_form_energy(n, p)
    k = math.sqrt(-eps)
    assert lambda_coeffs(p, eps).lambda1 == pytest.approx(-2 * n * k, abs=1e-12 * max(1.0, abs(p.alpha1), k))


def test_lambda2_vanishes_on_closed_ground_state(ground_reference):
    p = ground_reference.closed_params()
    assert abs(lambda_coeffs(p, closed_form_energy(0, p)).lambda2) <= 1e-14


# ---- recursion

def test_recursion_ground_truncates_when_lambda2_vanishes():
    p = REFERENCE_SETS["G2"].closed_params()
    c, tail = recursion_polynomial(0, p, closed_form_energy(0, p))
    assert list(c) == [1.0] and abs(tail) <= 1e-14


@given(admissible_triples(), st.floats(-2, 2))
def test_first_coefficient(t, a2):
    p = PotentialParams(t[0], a2, t[1], t[2])
    eps = closed_form_energy(1, p)
    c, _ = recursion_polynomial(1, p, eps)
    assert c[1] == pytest.approx(lambda_coeffs(p, eps).lambda2 / (2 * p.alpha4), rel=1e-14, abs=1e-300)


@pytest.mark.parametrize("name", ["E2", "E3"])
def test_rounded_excited_sets_nearly_truncate(name):
    p = REFERENCE_SETS[name].params
    c, tail = recursion_polynomial(1, p, closed_form_energy(1, p))
    assert abs(tail) / max(abs(c[0]), abs(c[1])) <= 2e-2


@given(admissible_triples(), st.floats(-2, 2), st.integers(0, 4))
def test_tail_coefficient_is_scaled_determinant(t, a2, n):
    p = PotentialParams(t[0], a2, t[1], t[2])
    eps = closed_form_energy(n, p)
    _, tail = recursion_polynomial(n, p, eps)
    raw = qes_determinant_residual(n, p, normalized=False)
    scale = math.prod(2 * (j + 1) * p.alpha4 for j in range(n + 1))
    assert tail == pytest.approx(raw / scale, rel=1e-8, abs=1e-12 * max(1.0, abs(raw / scale)))


@given(admissible_triples(min_delta=0.2, min_alpha4=0.05), st.integers(0, 4))
def test_tail_vanishes_exactly_where_the_determinant_does(t, n):
    # small alpha4 inflates c_{n+1} by (1/alpha4)^(n+1); the exact scaling is
    # covered by test_tail_coefficient_is_scaled_determinant
    a1, a3, a4 = t
    for a2 in solve_alpha2_roots(n, a1, a3, a4):
        p = PotentialParams(a1, a2, a3, a4)
        eps = closed_form_energy(n, p)
        c, tail = recursion_polynomial(n, p, eps)
        _, _, lower = recursion_matrix(n, p)
        # magnitude of everything that cancels in the last recursion step
        lam_scale = abs(a2) + a3**2 / (4 * a4**2) + abs(a3 / (2 * a4)) + 2 * a4 * math.sqrt(-eps)
        diag_scale = lam_scale + 2 * n * p.delta + n * (n - 1)
        pieces = (diag_scale + (abs(lower[n - 1]) if n else 0.0)) * np.max(np.abs(c))
        assert abs(qes_determinant_residual(n, p)) <= 1e-10 * max(1.0, abs(a2)) ** (n + 1)
        # eigenvalue roots carry an error of order eps * |M|, amplified over n steps
        assert abs(tail) <= 1e-8 * pieces / (2 * (n + 1) * a4)
        off = PotentialParams(a1, a2 + 0.1, a3, a4)
        assert abs(qes_determinant_residual(n, off)) > 1e-10


def test_matrix_rows():
    p = PotentialParams(-0.2, 0.1, -0.01, 0.05)
    diag, upper, lower = recursion_matrix(2, p)
    eps = closed_form_energy(2, p)
    k, d = math.sqrt(-eps), p.delta
    lam2 = lambda_coeffs(p, eps).lambda2
    assert np.allclose(diag, [lam2 - 2 * j * d - j * (j - 1) for j in range(3)], rtol=1e-14)
    assert np.allclose(upper, [-2 * (j + 1) * p.alpha4 for j in range(2)], rtol=1e-14)
    assert np.allclose(lower, [-2 * (2 - j + 1) * k for j in range(1, 3)], rtol=1e-14)


# ---- determinant specialisations

@given(admissible_triples(), st.floats(-0.5, 0.5))
def test_ground_determinant_is_lambda2(t, a2):
    p = PotentialParams(t[0], a2, t[1], t[2])
    eps = closed_form_energy(0, p)
    lam2 = lambda_coeffs(p, eps).lambda2
    assume(abs(lam2) <= 1)
    assert qes_determinant_residual(0, p) == lam2
    assert 4 * p.alpha4**2 * lam2 == pytest.approx(ground_constraint_residual(p), rel=1e-9, abs=1e-15)


@given(admissible_triples(), st.floats(-2, 2))
def test_first_excited_determinant(t, a2):
    p = PotentialParams(t[0], a2, t[1], t[2])
    eps = closed_form_energy(1, p)
    lam2 = lambda_coeffs(p, eps).lambda2
    expected = lam2 * (lam2 - 2 * p.delta) - 4 * p.alpha4 * math.sqrt(-eps)
    assert qes_determinant_residual(1, p, normalized=False) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@given(admissible_triples(), st.floats(-2, 2))
def test_polynomial_constraint_factorises(t, a2):
    p = PotentialParams(t[0], a2, t[1], t[2])
    eps = closed_form_energy(1, p)
    lam2 = lambda_coeffs(p, eps).lambda2
    bracket = lam2 * (lam2 - 2 * p.delta) - 4 * p.alpha4 * math.sqrt(-eps)
    raw = first_excited_constraint_residual(p, normalized=False)
    expected = 16 * p.alpha4**4 * (p.alpha3 + 4 * p.alpha4) ** 2 * bracket
    scale = max(abs(raw), abs(expected), 1e-300)
    assert abs(raw - expected) <= 1e-8 * scale + 1e-12 * p.alpha4**8


# ---- ground constraint

def test_ground_reference_sets_close_within_rounding(ground_reference):
    assert abs(ground_constraint_residual(ground_reference.params)) <= 5e-6


def test_g1_residual_value():
    assert ground_constraint_residual(REFERENCE_SETS["G1"].params) == pytest.approx(7.1224e-7, rel=1e-4)


def test_published_alpha2_inside_rounding_box(reference):
    lo, hi = reference.alpha2_rounding_range()
    assert lo <= reference.params.alpha2 <= hi


@given(admissible_triples())
def test_ground_inversion_closes(t):
    a1, a3, a4 = t
    p = PotentialParams(a1, solve_alpha2_ground(a1, a3, a4), a3, a4)
    scale = max(p.alpha3**2, abs(2 * p.alpha3 * p.alpha4), 8 * p.alpha4**3 * math.sqrt(-closed_form_energy(0, p)), 1e-300)
    assert abs(ground_constraint_residual(p)) <= 1e-13 * scale


@given(st.floats(-3, -1e-3), st.floats(1e-3, 3))
def test_ground_alpha2_without_alpha3(a1, a4):
    assert solve_alpha2_ground(a1, 0.0, a4) == pytest.approx(-a4 * abs(a1), rel=1e-14)


def test_published_ground_alpha2_values():
    assert solve_alpha2_ground(-0.1, -0.0097, 0.0053) == pytest.approx(-0.0776, abs=1e-2)
    assert solve_alpha2_ground(-0.1, -0.0070, 0.0037) == pytest.approx(-0.0603, abs=5e-3)


# ---- first excited constraint

@pytest.mark.parametrize("name", ["E2", "E3"])
def test_rounded_excited_constraint(name):
    assert abs(first_excited_constraint_residual(REFERENCE_SETS[name].params)) <= 2e-2


@given(admissible_triples())
def test_n1_roots_close_the_constraint(t):
    a1, a3, a4 = t
    roots = solve_constraint_n1(a1, a3, a4)
    assert len(roots) == 2 and roots[0] < roots[1]
    k = math.sqrt(-closed_form_energy(1, PotentialParams(a1, 0.0, a3, a4)))
    for a2 in roots:
        r = lambda v: first_excited_constraint_residual(PotentialParams(a1, v, a3, a4))
        # alpha2 = lambda2 - offset loses digits at the scale of the offset; a
        # rounding-level move of that size bounds what a double root can reach
        scale = abs(a2) + a3**2 / (4 * a4**2) + abs(a3 / (2 * a4)) + 2 * a4 * k
        h = 4 * np.finfo(float).eps * scale
        assert abs(r(a2)) <= max(1e-12, abs(r(a2 + h) - r(a2 - h)))


def test_physical_n1_root_closes_on_reference_triples(excited_reference):
    a1, _, a3, a4 = excited_reference.params.as_tuple()
    a2 = solve_constraint_n1(a1, a3, a4)[0]
    assert abs(first_excited_constraint_residual(PotentialParams(a1, a2, a3, a4))) <= 1e-12


@pytest.mark.parametrize("a1", [-0.2, -1e-6])
def test_n1_roots_match_a_dense_sign_change_scan(a1):
    a3, a4 = -0.0002, 0.0029
    roots = solve_constraint_n1(a1, a3, a4)
    grid = np.linspace(-10, 10, 200001)
    vals = np.array([qes_determinant_residual(1, PotentialParams(a1, g, a3, a4), normalized=False) for g in grid])
    crossings = grid[:-1][np.sign(vals[:-1]) != np.sign(vals[1:])]
    assert len(crossings) == len(roots)
    for r, c in zip(roots, crossings):
        assert abs(r - c) <= 2e-4


def test_e1_root_list_is_near_published_value():
    roots = solve_constraint_n1(-0.2, -0.0002, 0.0029)
    lo, hi = REFERENCE_SETS["E1"].alpha2_rounding_range()
    assert lo <= roots[0] <= hi and lo <= -0.0301 <= hi


@given(admissible_triples(), st.integers(2, 5))
def test_higher_n_roots_are_real_and_close(t, n):
    a1, a3, a4 = t
    roots = solve_alpha2_roots(n, a1, a3, a4)
    assert len(roots) == n + 1
    for a2 in roots:
        p = PotentialParams(a1, a2, a3, a4)
        assert abs(qes_determinant_residual(n, p)) <= 1e-9


# ---- wavefunctions

def test_ground_wavefunction_shape(ground_reference):
    p = ground_reference.closed_params()
    wf = build_wavefunction(0, p)
    assert wf.poly_coeffs == (1.0,)
    assert wf.power == p.delta
    assert wf.exp_coeffs == (math.sqrt(-closed_form_energy(0, p)), p.alpha4, 0.0, 0.0)


def test_excited_wavefunction_polynomial(excited_reference):
    p = excited_reference.closed_params()
    eps = closed_form_energy(1, p)
    wf = build_wavefunction(1, p)
    assert wf.poly_coeffs == pytest.approx((1.0, lambda_coeffs(p, eps).lambda2 / (2 * p.alpha4)), rel=1e-14)


def test_unclosed_parameters_are_rejected():
    with pytest.raises(ConstraintViolationError) as info:
        build_wavefunction(1, REFERENCE_SETS["E1"].params)
    assert abs(info.value.residual) > 1e-8


def test_physical_branch_has_one_node(excited_reference):
    p = excited_reference.closed_params()
    x0 = physical_node_position(p)
    assert x0 is not None and x0 > 0
    wf = build_wavefunction(1, p)
    x = np.geomspace(x0 / 100, x0 * 100, 2001)
    assert count_nodes(evaluate_wavefunction(wf, x)) == 1


def test_other_branch_is_nodeless(excited_reference):
    a1, _, a3, a4 = excited_reference.params.as_tuple()
    upper = PotentialParams(a1, solve_constraint_n1(a1, a3, a4)[1], a3, a4)
    assert physical_node_position(upper) is None


def test_ground_density_has_single_interior_maximum():
    wf = build_wavefunction(0, REFERENCE_SETS["G1"].closed_params())
    x = np.geomspace(1e-4, 100, 20001)
    d = evaluate_wavefunction(wf, x) ** 2
    i = int(np.argmax(d))
    assert 0 < i < x.size - 1
    assert np.all(np.diff(d[: i + 1]) >= 0) and np.all(np.diff(d[i:]) <= 0)


def test_solve_ordinary_returns_sorted_closed_solutions():
    sols = solve_ordinary(1, -0.2, -0.0002, 0.0029)
    assert [s.params.alpha2 for s in sols] == sorted(s.params.alpha2 for s in sols)
    assert all(abs(s.constraint_residual) <= 1e-8 and s.energy < 0 for s in sols)
    assert all(len(s.wavefunction.poly_coeffs) == 2 for s in sols)
