"""Self-check suites behind ``coulomb4 verify``.

Every check returns a :class:`CheckResult` holding the measured value and the
limit it is compared against. Solver non-convergence propagates as an
exception so callers can tell "did not converge" from "converged but wrong".
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad

from .core import PotentialParams, potential_value, effective_potential_value
from .fixtures import REFERENCE_SETS
from .gup_solver import (
    GupSolution,
    bethe_quartic_residual,
    build_gup_wavefunction,
    solve_first_excited_gup,
    solve_ground_gup,
)
from .heun import dch_parameters, polynomial_termination_check, rescaled_lie_coefficients
from .oracle import default_grid, fd_eigen_solve, ode_residual
from .ordinary_qes import (
    build_wavefunction,
    closed_form_energy,
    first_excited_constraint_residual,
    ground_constraint_residual,
    recursion_polynomial,
)
from .thermo import PartitionRequest, erfi, erfi_integral, partition_euler_maclaurin

GUP_GROUND_POINTS = ((-0.5, 1.0), (-0.3, 0.5))
GUP_EXCITED_POINTS = ((-0.3, 0.5), (-0.5, 1.0))
SWEEP_SEED = 20240611
SWEEP_CASES = 50


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    limit: float


def _le(name: str, value: float, limit: float) -> CheckResult:
    value = float(value)
    return CheckResult(name, bool(abs(value) <= limit), value, float(limit))


def _bare(p: PotentialParams) -> Callable[[np.ndarray], np.ndarray]:
    return lambda x: potential_value(p, x)


def ordinary_checks() -> list[CheckResult]:
    out = []
    for ref in REFERENCE_SETS.values():
        if ref.n == 0:
            out.append(_le(f"{ref.name} ground constraint (raw)", ground_constraint_residual(ref.params), 5e-6))
        else:
            lo, hi = ref.alpha2_rounding_range()
            a2 = ref.params.alpha2
            dist = max(lo - a2, a2 - hi, 0.0)
            out.append(_le(f"{ref.name} alpha2 inside rounding-box closure range", dist, 0.0))
        p = ref.closed_params()
        eps = closed_form_energy(ref.n, p)
        wf = build_wavefunction(ref.n, p)
        grid = default_grid(wf)
        res = fd_eigen_solve(_bare(p), grid, k=ref.n + 1)
        dev = abs(res.eigenvalues[ref.n] - eps) / abs(eps)
        tol = max(5e-3, res.richardson_error[ref.n] / abs(eps))
        out.append(_le(f"{ref.name} oracle eigenvalue relative deviation", dev, tol))
        out.append(_le(f"{ref.name} oracle node count minus n", res.node_counts[ref.n] - ref.n, 0))
        out.append(_le(f"{ref.name} ODE residual", ode_residual(wf, lambda x: potential_value(p, x) - eps, grid), 1e-10))
    return out


def gup_solutions() -> list[GupSolution]:
    sols = [solve_ground_gup(a1, b) for a1, b in GUP_GROUND_POINTS]
    for a1, b in GUP_EXCITED_POINTS:
        sols.extend(solve_first_excited_gup(a1, b))
    return sols


def gup_checks() -> list[CheckResult]:
    out = []
    for s in gup_solutions():
        tag = f"GUP n={s.n} alpha1={s.alpha1:g} beta={s.beta:g}"
        out.append(_le(f"{tag} residual norm", s.residual_norm, 1e-9))
        if s.n == 1:
            out.append(_le(f"{tag} Bethe quartic", bethe_quartic_residual(s), 1e-10))
        wf = build_gup_wavefunction(s)
        grid = default_grid(wf)
        gam = s.gamma()
        out.append(_le(f"{tag} ODE residual", ode_residual(wf, gam, grid), 1e-9))
        x = grid.nodes()[:: max(1, grid.points // 200)]
        V = potential_value(s.params, x)
        lhs = effective_potential_value(gam, x)
        rhs = (V - s.eps_gup) + s.beta * (V - s.eps_ordinary) ** 2
        out.append(_le(f"{tag} gamma identity", np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))), 1e-10))
        res = fd_eigen_solve(gam, grid, k=s.n + 1)
        out.append(_le(f"{tag} shifted oracle eigenvalue / gamma0", res.eigenvalues[s.n] / gam[0], 5e-3))
        out.append(_le(f"{tag} oracle node count minus n", res.node_counts[s.n] - s.n, 0))
    return out


def heun_checks() -> list[CheckResult]:
    out = []
    for ref in REFERENCE_SETS.values():
        p = ref.closed_params()
        eps = closed_form_energy(ref.n, p)
        d = dch_parameters(p, eps)
        out.append(_le(f"{ref.name} omega + n", d.omega + ref.n, 1e-12))
        ok, resid = polynomial_termination_check(d, ref.n)
        out.append(_le(f"{ref.name} series termination", resid, 1e-8))
        c, _ = recursion_polynomial(ref.n, p, eps)
        h = rescaled_lie_coefficients(d, eps, ref.n)
        out.append(_le(f"{ref.name} Heun/Lie proportionality", proportionality_gap(h, c), 1e-9))
    return out


def proportionality_gap(u, v) -> float:
    """Relative distance of ``u`` from the line through ``v`` (zero when parallel)."""
    u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
    k = float(np.dot(u, v) / np.dot(v, v))
    return float(np.max(np.abs(u - k * v)) / np.max(np.abs(u)))


def thermo_sweep_requests(seed: int = SWEEP_SEED, cases: int = SWEEP_CASES) -> list[PartitionRequest]:
    """Random admissible partition requests.

    ``alpha3/alpha4`` is kept in ``[-1, 2]`` so that ``delta`` lies in ``[0.5, 2]``;
    the summand varies on a scale of ``delta`` in ``n``, and much smaller
    ``delta`` turns the Euler-Maclaurin corrections into a divergent series.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(cases):
        a1 = -rng.uniform(0.05, 1.0)
        a4 = 10.0 ** rng.uniform(-3.0, -1.0)
        a3 = a4 * rng.uniform(-1.0, 2.0)
        T = 10.0 ** rng.uniform(-1.0, 1.0)
        nu = int(rng.choice([5, 10, 20]))
        out.append(PartitionRequest(PotentialParams(a1, 0.0, a3, a4), T, nu, 2))
    return out


def erfi_series(z: float, terms: int = 200) -> float:
    """Maclaurin series of erfi; every term has the sign of ``z``, so no cancellation."""
    acc, term, k = [], z, 0
    while k < terms:
        acc.append(term / (2 * k + 1))
        k += 1
        term *= z * z / k
    return 2.0 / math.sqrt(math.pi) * math.fsum(acc)


def thermo_checks() -> list[CheckResult]:
    out = []
    worst_em, worst_int = 0.0, 0.0
    for req in thermo_sweep_requests():
        r = partition_euler_maclaurin(req)
        bound = max(2.0 * r.remainder_estimate, 1e-6 * r.z_direct)
        worst_em = max(worst_em, abs(r.z_euler_maclaurin - r.z_direct) / bound)
        p, T = req.params, req.temperature
        f = lambda x: math.exp((p.alpha1 * p.alpha4) ** 2 / T / (p.alpha3 + 2.0 * (x + 1.0) * p.alpha4) ** 2)
        ref, _ = quad(f, 0.0, req.nu, epsabs=0.0, epsrel=1e-13, limit=200)
        worst_int = max(worst_int, abs(erfi_integral(p, T, req.nu) - ref) / abs(ref))
    out.append(_le("Euler-Maclaurin error / max(2 remainder, 1e-6 Z), worst of sweep", worst_em, 1.0))
    out.append(_le("erfi integral vs quadrature, worst relative", worst_int, 1e-8))
    zs = np.linspace(-5.0, 5.0, 201)
    err = max(abs(erfi(z) - erfi_series(z)) / max(abs(erfi_series(z)), 1e-300) for z in zs if z != 0.0)
    out.append(_le("erfi vs series on [-5, 5], worst relative", err, 1e-12))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "ordinary": ordinary_checks,
    "gup": gup_checks,
    "heun": heun_checks,
    "thermo": thermo_checks,
}


def run_suite(scope: str) -> list[CheckResult]:
    if scope == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[scope]()
