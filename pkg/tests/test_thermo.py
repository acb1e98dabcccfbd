import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad, simpson

from coulomb4 import (
    DomainError,
    OverflowGuardError,
    PotentialParams,
    REFERENCE_SETS,
    closed_form_energy,
    erfi,
    erfi_integral,
    partition_direct,
    partition_euler_maclaurin,
    thermo_quantities,
)
from coulomb4.checks import erfi_series, thermo_sweep_requests
from coulomb4.thermo import PartitionRequest, euler_maclaurin_constant_check, summand_derivative

G1 = REFERENCE_SETS["G1"].params


def _terms(p, T, nu):
    return [math.exp(-closed_form_energy(n, p) / T) for n in range(nu + 1)]


@pytest.mark.parametrize("kwargs", [dict(temperature=0.0, nu=3), dict(temperature=1.0, nu=-1), dict(temperature=1.0, nu=2.5),
                                    dict(temperature=1.0, nu=3, em_order=0), dict(temperature=1.0, nu=3, em_order=5)])
def test_request_validation(kwargs):
    with pytest.raises(DomainError):
        PartitionRequest(G1, **kwargs)


def test_single_level():
    z = partition_direct(PartitionRequest(G1, 0.7, 0))
    assert z == pytest.approx(math.exp(-closed_form_energy(0, G1) / 0.7), rel=1e-15)


def test_direct_sum_is_order_independent():
    terms = _terms(G1, 1.0, 10)
    z = partition_direct(PartitionRequest(G1, 1.0, 10))
    assert z >= 11
    shuffled = terms[:]
    random.Random(5).shuffle(shuffled)
    for order in (terms, terms[::-1], shuffled):
        assert abs(sum(order) - z) <= 1e-14 * z


def test_overflow_guard():
    with pytest.raises(OverflowGuardError):
        partition_direct(PartitionRequest(G1, 1e-4, 3))


def test_constant_summand_is_exact():
    for nu in (0, 1, 7, 30):
        r = euler_maclaurin_constant_check(nu)
        assert r.z_euler_maclaurin == nu + 1 == r.z_direct


def test_g1_within_remainder():
    r = partition_euler_maclaurin(PartitionRequest(G1, 1.0, 10, 2))
    assert abs(r.z_euler_maclaurin - r.z_direct) <= max(1e-6, r.remainder_estimate)
    assert r.z_direct == pytest.approx(partition_direct(PartitionRequest(G1, 1.0, 10)), rel=0)


def test_single_level_euler_maclaurin_is_exact():
    r = partition_euler_maclaurin(PartitionRequest(G1, 2.0, 0, 3))
    assert r.z_euler_maclaurin == pytest.approx(r.z_direct, rel=1e-15)


def test_em_sweep_within_twice_the_remainder():
    for req in thermo_sweep_requests():
        r = partition_euler_maclaurin(req)
        assert abs(r.z_euler_maclaurin - r.z_direct) <= max(2 * r.remainder_estimate, 1e-6 * r.z_direct)


@given(st.floats(-1.0, -0.05), st.floats(1e-3, 0.1), st.floats(-1.0, 2.0), st.floats(0.1, 10.0),
       st.sampled_from([5, 10, 20]), st.integers(1, 4))
def test_em_within_twice_the_remainder_any_order(a1, a4, r, T, nu, k):
    req = PartitionRequest(PotentialParams(a1, 0.0, r * a4, a4), T, nu, k)
    res = partition_euler_maclaurin(req)
    assert abs(res.z_euler_maclaurin - res.z_direct) <= max(2 * res.remainder_estimate, 1e-6 * res.z_direct)


def test_higher_order_is_more_accurate_on_a_smooth_case():
    p = PotentialParams(-0.5, 0.0, 0.05, 0.05)
    errs = []
    for k in (1, 2, 3, 4):
        r = partition_euler_maclaurin(PartitionRequest(p, 1.0, 20, k))
        errs.append(abs(r.z_euler_maclaurin - r.z_direct))
    assert errs == sorted(errs, reverse=True)


@pytest.mark.parametrize("order", [1, 2, 3, 5])
def test_analytic_derivatives(order):
    a1, a3, a4, T, n = -0.6, 0.02, 0.05, 0.8, 1.3
    h = 1e-3
    lower = lambda m: summand_derivative(a1, a3, a4, T, m, order - 1)
    fd = (lower(n + h) - lower(n - h)) / (2 * h)
    assert summand_derivative(a1, a3, a4, T, n, order) == pytest.approx(fd, rel=1e-5)


def test_erfi_values():
    assert erfi(1.0) == pytest.approx(1.6504257587975426, rel=1e-15)
    assert erfi(0.0) == 0.0


def test_erfi_against_series():
    for z in np.linspace(-5, 5, 401):
        s = erfi_series(float(z))
        assert abs(erfi(float(z)) - s) <= 1e-12 * max(abs(s), 1e-300)


@given(st.floats(0, 25))
def test_erfi_is_odd(z):
    assert erfi(-z) == -erfi(z)


def test_erfi_overflow_guard():
    with pytest.raises(OverflowGuardError):
        erfi(27.0)


def test_erfi_vectorised():
    z = np.array([-1.0, 0.0, 1.0])
    assert np.allclose(erfi(z), [-1.6504257587975426, 0.0, 1.6504257587975426], rtol=1e-15)


def test_integral_matches_simpson_on_g1():
    x = np.linspace(0, 10, 200001)
    f = np.exp((G1.alpha1 * G1.alpha4) ** 2 / (G1.alpha3 + 2 * (x + 1) * G1.alpha4) ** 2)
    assert erfi_integral(G1, 1.0, 10) == pytest.approx(simpson(f, x=x), rel=1e-8)


def test_integral_matches_quadrature_on_sweep():
    for req in thermo_sweep_requests():
        p, T = req.params, req.temperature
        f = lambda x: math.exp((p.alpha1 * p.alpha4) ** 2 / T / (p.alpha3 + 2 * (x + 1) * p.alpha4) ** 2)
        ref, _ = quad(f, 0, req.nu, epsabs=0, epsrel=1e-13, limit=200)
        assert erfi_integral(p, T, req.nu) == pytest.approx(ref, rel=1e-8)


def test_integral_needs_positive_temperature():
    with pytest.raises(DomainError):
        erfi_integral(G1, 0.0, 3)


def test_one_level_thermodynamics():
    T = np.array([0.5, 1.0, 2.0, 3.0])
    rows = thermo_quantities(G1, T, 0)
    eps0 = closed_form_energy(0, G1)
    for r in rows[1:-1]:
        assert r.U == pytest.approx(eps0, rel=1e-12)
        assert abs(r.C) <= 1e-12
    assert math.isnan(rows[0].U) and math.isnan(rows[-1].S)


def test_entropy_identity():
    rows = thermo_quantities(G1, np.geomspace(0.1, 10, 25), 10)
    for r in rows[1:-1]:
        assert r.S == pytest.approx((r.U - r.F) / r.T, rel=1e-12)
        assert r.F == pytest.approx(-r.T * math.log(r.Z), rel=1e-15)


def test_mean_energy_rises_with_temperature():
    T = np.geomspace(0.1, 10, 41)
    rows = thermo_quantities(G1, T, 10)[1:-1]
    U = np.array([r.U for r in rows])
    # the three-point rule errs by O(h^2) times the curvature; allow that much
    slack = 1e-3 * np.max(np.abs(U))
    assert np.all(np.diff(U) >= -slack)


@pytest.mark.parametrize("grid", [[1.0, 2.0], [1.0, 3.0, 2.0], [-1.0, 1.0, 2.0]])
def test_temperature_grid_validation(grid):
    with pytest.raises(DomainError):
        thermo_quantities(G1, grid, 5)
