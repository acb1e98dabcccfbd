"""Bethe-ansatz states of the minimal-length (GUP) Coulomb-4 equation.

The ansatz ``psi = x**f exp(-a x - b/x - c/x**2 - d/x**3) prod_i (x - x_i)``
solves ``-psi'' + V_e psi = 0`` when

* ``a, b, c, d, f`` follow from the top and bottom ``gamma`` coefficients,
* four "general conditions" on the power sums of the roots hold, and
* the roots ``x_i`` satisfy the Bethe equations.

The first general condition fixes ``eps_gup``; the other three tie
``alpha2, alpha3, alpha4`` to ``alpha1`` and ``beta``. The ordinary energy
``eps_n = -alpha1**2 alpha4**2 / (alpha3 + 2(n+1) alpha4)**2`` enters as a
parameter, so for fixed ``(alpha1, beta, n)`` the constrained couplings must
be found self-consistently.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .core import (
    ConstraintViolationError,
    ConvergenceError,
    DomainError,
    EffectiveCoefficients,
    EnergyPair,
    GupContext,
    PotentialParams,
    SingularDenominatorError,
    WaveFunctionSpec,
    effective_coefficients,
)

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-9
FIXED_POINT_STEPS = 200
NEWTON_STEPS = 100


@dataclass(frozen=True)
class AnsatzParams:
    a: float
    b: float
    c: float
    d: float
    f: float
    # gamma-form values; nan when gamma8 = 0
    b_gamma: float = math.nan
    c_gamma: float = math.nan
    d_gamma: float = math.nan
    f_gamma: float = math.nan

    @property
    def dual_form_deviation(self) -> float:
        """Largest relative gap between the alpha-form and the gamma-form."""
        pairs = [(self.b, self.b_gamma), (self.c, self.c_gamma), (self.d, self.d_gamma), (self.f, self.f_gamma)]
        gaps = [abs(u - v) / max(abs(u), abs(v), 1e-300) for u, v in pairs if not math.isnan(v)]
        return max(gaps) if gaps else math.nan


@dataclass
class GupSolution:
    n: int
    alpha1: float
    beta: float
    alpha2: float
    alpha3: float
    alpha4: float
    eps_ordinary: float
    eps_gup: float
    bethe_roots: tuple[float, ...] = ()
    residual_norm: float = math.nan
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def params(self) -> PotentialParams:
        return PotentialParams(self.alpha1, self.alpha2, self.alpha3, self.alpha4)

    @property
    def context(self) -> GupContext:
        return GupContext(self.beta)

    @property
    def energies(self) -> EnergyPair:
        return EnergyPair(self.eps_ordinary, self.eps_gup, self.n)

    def gamma(self) -> EffectiveCoefficients:
        return effective_coefficients(self.params, self.context, self.energies)


def _ordinary_energy(n: int, alpha1: float, alpha3: float, alpha4: float) -> float:
    denom = alpha3 + 2.0 * (n + 1) * alpha4
    if denom == 0.0:
        raise SingularDenominatorError("alpha3 + 2(n+1) alpha4 vanishes")
    return -(alpha1 * alpha4) ** 2 / denom**2


def ansatz_parameters(p: PotentialParams, g: GupContext, e: EnergyPair) -> AnsatzParams:
    beta = g.beta
    a_sq = beta * e.eps_ordinary**2 - e.eps_gup
    if not a_sq > 0:
        raise DomainError("beta eps^2 - eps_gup must be positive for a real decay rate")
    sb = math.sqrt(beta)
    a = math.sqrt(a_sq)
    b = p.alpha2 * sb
    c = 0.5 * p.alpha3 * sb
    d = p.alpha4**2 * sb / 3.0
    f = 2.0 + p.alpha1 * sb
    gam = effective_coefficients(p, g, e)
    g5, g6, g7, g8 = gam[5], gam[6], gam[7], gam[8]
    if g8 > 0:
        r8 = math.sqrt(g8)
        b_g = -(g7**2 - 4.0 * g6 * g8) / (8.0 * g8 * r8)
        c_g = g7 / (4.0 * r8)
        d_g = r8 / 3.0
        f_g = 2.0 + (8.0 * g5 * g8**2 - 4.0 * g6 * g7 * g8 + g7**3) / (16.0 * g8**2 * r8)
    else:
        b_g = c_g = d_g = f_g = math.nan
    return AnsatzParams(a, b, c, d, f, b_g, c_g, d_g, f_g)


def gup_energy(n: int, eps_ordinary: float, alpha1: float, beta: float) -> float:
    """Closed-form GUP energy of the degree-``n`` Bethe state."""
    denom = alpha1 * math.sqrt(beta) + n + 2.0
    if denom == 0.0:
        raise SingularDenominatorError("alpha1 sqrt(beta) + n + 2 vanishes")
    if denom < 0:
        raise DomainError("alpha1 sqrt(beta) + n + 2 must be positive")
    if beta == 0.0:
        return -(alpha1**2) / (4.0 * (n + 2.0) ** 2)
    ratio = (2.0 * beta * eps_ordinary - 1.0) / denom
    return -0.25 * alpha1**2 * ratio**2 + beta * eps_ordinary**2


def energy_relation_residual(n: int, eps_ordinary: float, eps_gup: float, alpha1: float, beta: float) -> float:
    """Implicit energy relation ``alpha1 [1 + 2 sqrt(beta) a - 2 beta eps] + 2(n+2) a``.

    ``a = sqrt(beta eps^2 - eps_gup)``. This is the leading general condition
    ``2 a f + 2 a n + gamma1 = 0`` written out.
    """
    a = math.sqrt(beta * eps_ordinary**2 - eps_gup)
    return alpha1 * (1.0 + 2.0 * math.sqrt(beta) * a - 2.0 * beta * eps_ordinary) + 2.0 * (n + 2) * a


def _power_sums(roots):
    x = np.asarray(roots, dtype=float)
    s1 = float(np.sum(x))
    p2 = float(np.sum(x**2))
    p3 = float(np.sum(x**3))
    pairs = float(sum(u * v for u, v in combinations(x, 2)))
    return s1, p2, p3, pairs


def general_condition_residuals(sol: GupSolution) -> np.ndarray:
    """The four general conditions evaluated on a candidate solution."""
    n = sol.n
    ap = ansatz_parameters(sol.params, sol.context, sol.energies)
    gam = sol.gamma()
    a, b, c, d, f = ap.a, ap.b, ap.c, ap.d, ap.f
    s1, p2, p3, pairs = _power_sums(sol.bethe_roots)
    r1 = 2.0 * a * f + 2.0 * a * n + gam[1]
    r2 = f * (f - 1.0) - 2.0 * a * b - gam[2] - 2.0 * a * s1 + 2.0 * f * n + (n - 1) * n
    r3 = 2.0 * b * f - 4.0 * a * c - 2.0 * b - gam[3] - 2.0 * a * p2 + 2.0 * (f + n - 1) * s1 + 2.0 * n * b
    r4 = (
        b * b - 6.0 * a * d + 4.0 * c * f - 6.0 * c - gam[4]
        - 2.0 * a * p3 + 2.0 * (f + n - 1) * p2 + 2.0 * pairs + 2.0 * b * s1 + 4.0 * n * c
    )
    return np.array([r1, r2, r3, r4])


def explicit_constraint_residuals(sol: GupSolution) -> np.ndarray:
    """``alpha_k - (closed-form expression)`` for alpha2, alpha3 and alpha4**2.

    These are the general conditions solved for the couplings; each equals
    the matching general condition divided by the common denominator.
    """
    n = sol.n
    beta, a1, a2, a3 = sol.beta, sol.alpha1, sol.alpha2, sol.alpha3
    sb = math.sqrt(beta)
    a = math.sqrt(beta * sol.eps_ordinary**2 - sol.eps_gup)
    den = 2.0 * beta * sol.eps_ordinary - 2.0 * sb * a - 1.0
    s1, p2, p3, pairs = _power_sums(sol.bethe_roots)
    rhs2 = (2.0 * a * s1 - a1 * sb * (2 * n + 3) - (n + 1) * (n + 2)) / den
    rhs3 = 2.0 * (a * p2 - sb * ((n + 1) * a2 + a1 * s1) - (n + 1) * s1) / den
    rhs4 = (
        2.0 * a * p3 - sb * ((2 * n + 1) * a3 + 2.0 * a2 * s1 + 2.0 * a1 * p2)
        - 2.0 * (n + 1) * p2 - 2.0 * pairs
    ) / den
    return np.array([a2 - rhs2, a3 - rhs3, sol.alpha4**2 - rhs4])


def bethe_residuals(sol: GupSolution) -> np.ndarray:
    """Bethe equations for the polynomial roots; empty for ``n = 0``."""
    x = np.asarray(sol.bethe_roots, dtype=float)
    if x.size == 0:
        return np.zeros(0)
    if np.any(x == 0):
        raise DomainError("Bethe roots must be nonzero")
    if np.unique(x).size != x.size:
        raise DomainError("Bethe roots must be distinct")
    sb = math.sqrt(sol.beta)
    a = math.sqrt(sol.beta * sol.eps_ordinary**2 - sol.eps_gup)
    out = np.empty(x.size)
    for i, xi in enumerate(x):
        pair = sum(1.0 / (xi - xj) for j, xj in enumerate(x) if j != i)
        num = xi**4 * a - sb * (sol.alpha4**2 + sol.alpha1 * xi**3 + sol.alpha2 * xi**2 + sol.alpha3 * xi) - 2.0 * xi**3
        out[i] = pair - num / xi**4
    return out


def bethe_quartic_residual(sol: GupSolution) -> float:
    """Polynomial form of the single n=1 Bethe equation (not divided by ``x1**4``)."""
    if sol.n != 1:
        raise DomainError("the quartic form applies to n = 1 only")
    (x1,) = sol.bethe_roots
    sb = math.sqrt(sol.beta)
    a = math.sqrt(sol.beta * sol.eps_ordinary**2 - sol.eps_gup)
    return (
        a * x1**4 - (2.0 + sol.alpha1 * sb) * x1**3
        - sb * (sol.alpha2 * x1**2 + sol.alpha3 * x1 + sol.alpha4**2)
    )


def _residual_norm(sol: GupSolution) -> float:
    parts = [np.abs(general_condition_residuals(sol))]
    if sol.n:
        parts.append(np.abs(bethe_residuals(sol)))
    return float(max(np.max(v) for v in parts if v.size))


def _make_solution(n, alpha1, beta, alpha2, alpha3, alpha4, roots=()) -> GupSolution:
    eps = _ordinary_energy(n, alpha1, alpha3, alpha4)
    epsg = gup_energy(n, eps, alpha1, beta)
    return GupSolution(
        n, alpha1, beta, float(alpha2), float(alpha3), float(alpha4), float(eps), float(epsg),
        tuple(float(r) for r in roots),
    )


def _check_beta(beta: float) -> None:
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"GUP solvers need beta in (0, 1], got {beta}")


def _ground_map(alpha1, beta, v):
    a2, a3, a4 = v
    sb = math.sqrt(beta)
    eps = _ordinary_energy(0, alpha1, a3, a4)
    epsg = gup_energy(0, eps, alpha1, beta)
    a = math.sqrt(beta * eps**2 - epsg)
    den = 2.0 * sb * a - 2.0 * beta * eps + 1.0
    n2 = (2.0 + 3.0 * sb * alpha1) / den
    n3 = 2.0 * sb * n2 / den
    n4sq = sb * n3 / den
    return np.array([n2, n3, math.sqrt(n4sq)]), den


def _ground_residual(alpha1, beta, v):
    a2, a3, a4 = v
    sb = math.sqrt(beta)
    eps = _ordinary_energy(0, alpha1, a3, a4)
    epsg = gup_energy(0, eps, alpha1, beta)
    a = math.sqrt(beta * eps**2 - epsg)
    den = 2.0 * sb * a - 2.0 * beta * eps + 1.0
    return np.array([
        a2 - (2.0 + 3.0 * sb * alpha1) / den,
        a3 - 2.0 * sb * a2 / den,
        a4 * a4 - sb * a3 / den,
    ])


def _fd_jacobian(fun, v, rel=1e-7):
    f0 = fun(v)
    jac = np.empty((f0.size, v.size))
    for j in range(v.size):
        h = rel * max(abs(v[j]), 1e-8)
        vp, vm = v.copy(), v.copy()
        vp[j] += h
        vm[j] -= h
        jac[:, j] = (fun(vp) - fun(vm)) / (2.0 * h)
    return jac


def _damped_newton(fun, v0, steps=NEWTON_STEPS, tol=1e-14, valid=lambda v: True):
    """Newton with backtracking line search; returns ``(v, |F|_inf, iterations)``."""
    v = np.array(v0, dtype=float)
    r = fun(v)
    norm = float(np.max(np.abs(r)))
    it = 0
    for it in range(1, steps + 1):
        if norm <= tol:
            break
        try:
            step = np.linalg.solve(_fd_jacobian(fun, v), -r)
        except np.linalg.LinAlgError:
            break
        lam = 1.0
        improved = False
        while lam >= 1.0 / 1024:
            trial = v + lam * step
            if valid(trial):
                try:
                    rt = fun(trial)
                except (ArithmeticError, ValueError):
                    rt = None
                if rt is not None and np.all(np.isfinite(rt)):
                    nt = float(np.max(np.abs(rt)))
                    if nt < norm:
                        v, r, norm = trial, rt, nt
                        improved = True
                        break
            lam *= 0.5
        if not improved:
            break
    return v, norm, it


def solve_ground_gup(alpha1: float, beta: float, damping: float = 0.5, tol: float = RESIDUAL_TOL) -> GupSolution:
    """Self-consistent ground-state couplings ``(alpha2, alpha3, alpha4)`` for given ``alpha1, beta``.

    Damped fixed-point iteration on the closed-form constraint map, seeded at
    its small-beta limit, with a Newton fallback if the iteration stalls.
    """
    _check_beta(beta)
    sb = math.sqrt(beta)
    lo = -2.0 / (3.0 * sb)
    if not lo < alpha1 < 0:
        raise DomainError(f"alpha1 must lie in ({lo:.6g}, 0) for beta={beta}")
    a2 = 2.0 + 3.0 * sb * alpha1
    a3 = 2.0 * sb * a2
    v = np.array([a2, a3, math.sqrt(sb * a3)])

    res = lambda w: _ground_residual(alpha1, beta, w)
    norm = float(np.max(np.abs(res(v))))
    steps = 0
    for steps in range(1, FIXED_POINT_STEPS + 1):
        target, _ = _ground_map(alpha1, beta, v)
        v = v + damping * (target - v)
        new = float(np.max(np.abs(res(v))))
        if new <= 1e-15:
            norm = new
            break
        if new >= norm and damping < 1.0 and steps > 20:
            norm = new
            break
        norm = new
    method = "fixed-point"
    if norm > 1e-13:
        v_n, norm_n, _ = _damped_newton(res, v, valid=lambda w: w[2] > 0 and w[1] + 2 * w[2] > 0)
        if norm_n < norm:
            v, norm, method = v_n, norm_n, "newton"
    sol = _make_solution(0, alpha1, beta, *v)
    sol.residual_norm = max(_residual_norm(sol), norm)
    sol.diagnostics = {"method": method, "iterations": steps, "constraint_residual": norm}
    if not sol.residual_norm <= tol:
        raise ConvergenceError("ground-state GUP constraints did not close", sol.residual_norm, steps)
    if not (sol.alpha2 > 0 and sol.alpha3 > 0):
        log.warning("ground-state solution violates alpha2, alpha3 > 0: %s", sol)
        sol.diagnostics["positivity_violation"] = True
    return sol


def _first_excited_residual(alpha1, beta, v):
    a2, a3, a4, x1 = v
    sol = _make_solution(1, alpha1, beta, a2, a3, a4, (x1,))
    explicit = explicit_constraint_residuals(sol)
    return np.array([explicit[0], explicit[1], explicit[2], bethe_residuals(sol)[0]])


def _first_excited_seed(alpha1, beta, x1):
    # leading order in beta: eps_1 -> 0 inside the constraint denominators
    sb = math.sqrt(beta)
    f = 2.0 + alpha1 * sb
    a = -alpha1 / (2.0 * (f + 1.0))
    den = -2.0 * sb * a - 1.0
    a2 = (2.0 * x1 * a - 5.0 * alpha1 * sb - 6.0) / den
    a3 = (2.0 * x1**2 * a - 2.0 * sb * (2.0 * a2 + alpha1 * x1) - 4.0 * x1) / den
    a4sq = (2.0 * x1**3 * a - sb * (3.0 * a3 + 2.0 * (a2 + alpha1 * x1) * x1) - 4.0 * x1**2) / den
    return np.array([a2, a3, math.sqrt(abs(a4sq)), x1])


def solve_first_excited_gup(
    alpha1: float,
    beta: float,
    seeds: int = 41,
    tol: float = RESIDUAL_TOL,
    dedupe_rtol: float = 1e-6,
) -> list[GupSolution]:
    """All self-consistent n=1 tuples ``(alpha2, alpha3, alpha4, x1)`` reachable from a multi-start.

    Newton is started from ``x1`` seeds log-spaced in ``[1e-2, 1e2]``.
    Solutions need ``alpha4 > 0`` and a real node ``x1 > 0``; they are sorted
    by ``(alpha4, x1)`` and deduplicated.
    """
    _check_beta(beta)
    if not alpha1 < 0:
        raise DomainError("alpha1 must be negative")
    if not alpha1 * math.sqrt(beta) + 3.0 > 0:
        raise DomainError("alpha1 sqrt(beta) + 3 must be positive")

    def valid(w):
        return w[2] > 0 and w[3] > 0 and w[1] + 4.0 * w[2] != 0

    res = lambda w: _first_excited_residual(alpha1, beta, w)
    found = []
    rejected = 0
    for x1 in np.logspace(-2, 2, seeds):
        v0 = _first_excited_seed(alpha1, beta, x1)
        if not valid(v0):
            rejected += 1
            continue
        try:
            v, norm, _ = _damped_newton(res, v0, valid=valid)
        except (ArithmeticError, ValueError):
            rejected += 1
            continue
        if norm > 1e-12 or not valid(v):
            rejected += 1
            continue
        sol = _make_solution(1, alpha1, beta, *v[:3], roots=(v[3],))
        try:
            sol.residual_norm = _residual_norm(sol)
        except (ArithmeticError, ValueError):
            rejected += 1
            continue
        if sol.residual_norm <= tol:
            sol.diagnostics = {"seed_x1": float(x1), "newton_residual": norm}
            found.append(sol)
    if not found:
        raise ConvergenceError("no first-excited GUP solution converged", math.nan, seeds)
    found.sort(key=lambda s: (s.alpha4, s.bethe_roots[0]))
    unique: list[GupSolution] = []
    for s in found:
        key = np.array([s.alpha2, s.alpha3, s.alpha4, s.bethe_roots[0]])
        if any(
            np.max(np.abs(key - np.array([u.alpha2, u.alpha3, u.alpha4, u.bethe_roots[0]]))
                   / np.maximum(np.abs(key), 1e-12)) <= dedupe_rtol
            for u in unique
        ):
            continue
        unique.append(s)
    for s in unique:
        s.diagnostics["rejected_seeds"] = rejected
    return unique


def build_gup_wavefunction(sol: GupSolution, tol: float = 1e-8) -> WaveFunctionSpec:
    if not sol.residual_norm <= tol:
        raise ConstraintViolationError("GUP solution does not close its constraints", sol.residual_norm)
    ap = ansatz_parameters(sol.params, sol.context, sol.energies)
    poly = np.polynomial.polynomial.polyfromroots(sol.bethe_roots) if sol.n else np.array([1.0])
    return WaveFunctionSpec(
        power=ap.f,
        exp_coeffs=(ap.a, ap.b, ap.c, ap.d),
        poly_coeffs=tuple(poly),
        label=f"gup n={sol.n}",
    )
