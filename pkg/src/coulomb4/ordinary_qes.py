"""Quasi-exactly-solvable states of the beta = 0 Coulomb-4 problem.

With the ansatz ``psi_n = x**delta exp(-(k x + alpha4/x)) phi_n(x)``,
``k = sqrt(-eps_n)``, the polynomial factor ``phi_n = sum_k c_k x**k``
terminates at degree ``n`` only if two things happen: the energy takes the
closed form ``-alpha1**2 alpha4**2 / (alpha3 + 2(n+1) alpha4)**2``, and the
``(n+1) x (n+1)`` tridiagonal determinant of the coefficient recursion
vanishes. The second condition is a polynomial of degree ``n+1`` in
``alpha2`` and is what carves out the allowed parameter surfaces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ConstraintViolationError,
    DomainError,
    PotentialParams,
    SingularDenominatorError,
    WaveFunctionSpec,
    evaluate_wavefunction,
)

__all__ = [
    "LambdaPair",
    "QesSolution",
    "closed_form_energy",
    "lambda_coeffs",
    "recursion_polynomial",
    "recursion_matrix",
    "qes_determinant_residual",
    "ground_constraint_residual",
    "solve_alpha2_ground",
    "first_excited_constraint_residual",
    "solve_constraint_n1",
    "solve_alpha2_roots",
    "build_wavefunction",
    "evaluate_wavefunction",
    "solve_ordinary",
    "physical_node_position",
]

CLOSURE_TOL = 1e-8


@dataclass(frozen=True)
class LambdaPair:
    lambda1: float
    lambda2: float


@dataclass
class QesSolution:
    n: int
    params: PotentialParams
    energy: float
    wavefunction: WaveFunctionSpec
    constraint_residual: float


def _energy_from_triple(n: int, alpha1: float, alpha3: float, alpha4: float) -> float:
    denom = alpha3 + 2.0 * (n + 1) * alpha4
    if denom == 0.0:
        raise SingularDenominatorError(
            f"alpha3 + 2(n+1) alpha4 vanishes for n={n} (alpha3={alpha3}, alpha4={alpha4})"
        )
    return -(alpha1 * alpha4) ** 2 / denom**2


def _check_triple(alpha1: float, alpha3: float, alpha4: float) -> None:
    if not alpha1 < 0:
        raise DomainError(f"alpha1 must be negative, got {alpha1}")
    if not alpha4 > 0:
        raise DomainError(f"alpha4 must be positive, got {alpha4}")
    if not alpha3 > -2.0 * alpha4:
        raise DomainError("delta = 1 + alpha3/(2 alpha4) must be positive")


def closed_form_energy(n: int, p: PotentialParams) -> float:
    """Energy of the degree-``n`` QES state; always negative."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if not p.admissible:
        raise DomainError("delta = 1 + alpha3/(2 alpha4) must be positive")
    return _energy_from_triple(n, p.alpha1, p.alpha3, p.alpha4)


def lambda_coeffs(p: PotentialParams, eps: float) -> LambdaPair:
    if not eps < 0:
        raise DomainError(f"energy must be negative, got {eps}")
    k = math.sqrt(-eps)
    r = p.alpha3 / p.alpha4
    lam1 = p.alpha1 + (2.0 + r) * k
    lam2 = p.alpha2 - 0.25 * r * r - 0.5 * r + 2.0 * p.alpha4 * k
    return LambdaPair(lam1, lam2)


def _alpha2_offset(n: int, alpha1: float, alpha3: float, alpha4: float) -> float:
    # lambda2 = alpha2 + offset at eps = eps_n
    k = math.sqrt(-_energy_from_triple(n, alpha1, alpha3, alpha4))
    r = alpha3 / alpha4
    return -0.25 * r * r - 0.5 * r + 2.0 * alpha4 * k


def recursion_polynomial(n: int, p: PotentialParams, eps: float):
    """Coefficients ``c_0..c_n`` (``c_0 = 1``) and the truncation residual ``c_{n+1}``.

    The lower coupling is ``lambda1 + 2(k-1) sqrt(-eps)``, which reduces to
    ``-2(n-k+1) sqrt(-eps)`` on the QES energy and reproduces the rows of
    :func:`recursion_matrix`.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    lam = lambda_coeffs(p, eps)
    k_ = math.sqrt(-eps)
    delta = p.delta
    c = np.zeros(n + 2)
    c[0] = 1.0
    prev = 0.0
    for k in range(n + 1):
        lower = lam.lambda1 + 2.0 * (k - 1) * k_
        c[k + 1] = ((lam.lambda2 - 2.0 * k * delta - k * (k - 1)) * c[k] + lower * prev) / (
            2.0 * (k + 1) * p.alpha4
        )
        prev = c[k]
    return c[: n + 1].copy(), float(c[n + 1])


def recursion_matrix(n: int, p: PotentialParams, eps: float | None = None):
    """Diagonal, super- and sub-diagonal of the tridiagonal QES matrix.

    Row ``k`` reads ``L_k c_{k-1} + A_k c_k + U_k c_{k+1} = 0`` with
    ``A_k = lambda2 - 2k delta - k(k-1)``, ``U_k = -2(k+1) alpha4`` and
    ``L_k = -2(n-k+1) sqrt(-eps)``.
    """
    if eps is None:
        eps = closed_form_energy(n, p)
    lam = lambda_coeffs(p, eps)
    k_ = math.sqrt(-eps)
    ks = np.arange(n + 1, dtype=float)
    diag = lam.lambda2 - 2.0 * ks * p.delta - ks * (ks - 1.0)
    upper = -2.0 * (ks[:-1] + 1.0) * p.alpha4
    lower = -2.0 * (n - ks[1:] + 1.0) * k_
    return diag, upper, lower


def qes_determinant_residual(n: int, p: PotentialParams, normalized: bool = True) -> float:
    """Determinant of the QES matrix at ``eps_n``, by the three-term recurrence.

    With ``normalized`` each row is divided by ``max(1, largest |entry|)`` so the
    value is scale-free for large entries and equals the raw determinant when
    every entry is at most one in magnitude (e.g. ``lambda2`` itself for n=0).
    """
    diag, upper, lower = recursion_matrix(n, p)
    scale = np.ones(n + 1)
    if normalized:
        for k in range(n + 1):
            row = [abs(diag[k])]
            if k < n:
                row.append(abs(upper[k]))
            if k > 0:
                row.append(abs(lower[k - 1]))
            scale[k] = max(1.0, max(row))
    d_prev2, d_prev = 1.0, diag[0] / scale[0]
    for k in range(1, n + 1):
        coupling = lower[k - 1] * upper[k - 1] / (scale[k] * scale[k - 1])
        d_prev2, d_prev = d_prev, (diag[k] / scale[k]) * d_prev - coupling * d_prev2
    return float(d_prev)


def ground_constraint_residual(p: PotentialParams) -> float:
    """``4 a2 a4^2 - a3^2 - 2 a3 a4 + 8 a4^3 sqrt(-eps_0)``; zero on the n=0 surface."""
    a1, a2, a3, a4 = p.as_tuple()
    k = math.sqrt(-closed_form_energy(0, p))
    return 4.0 * a2 * a4**2 - a3**2 - 2.0 * a3 * a4 + 8.0 * a4**3 * k


def solve_alpha2_ground(alpha1: float, alpha3: float, alpha4: float) -> float:
    """The unique ``alpha2`` putting ``(alpha1, alpha3, alpha4)`` on the ground-state surface."""
    if alpha4 == 0.0:
        raise SingularDenominatorError("alpha4 = 0")
    _check_triple(alpha1, alpha3, alpha4)
    return -_alpha2_offset(0, alpha1, alpha3, alpha4)


def _first_excited_terms(p: PotentialParams):
    a1, a2, a3, a4 = p.as_tuple()
    s = a3 + 4.0 * a4
    a4sq = a4 * a4
    t1 = 64.0 * a1**2 * a4sq**4
    t2 = 16.0 * a4sq**2 * s * (a3**2 + 4.0 * a3 * a4 + 8.0 * a4sq - 4.0 * a2 * a4sq) * a1
    t3 = (
        s**2
        * (a3**2 + 2.0 * a3 * a4 - 4.0 * a2 * a4sq)
        * (a3**2 + 6.0 * a3 * a4 + 8.0 * a4sq - 4.0 * a2 * a4sq)
    )
    return t1, t2, t3


def first_excited_constraint_residual(p: PotentialParams, normalized: bool = True) -> float:
    """Left side of the n=1 parameter constraint (a polynomial of order ``alpha4**8``).

    Normalised by the largest of its three additive terms, since the raw
    value underflows for small ``alpha4``.
    """
    t1, t2, t3 = _first_excited_terms(p)
    total = t1 + t2 + t3
    if not normalized:
        return total
    scale = max(abs(t1), abs(t2), abs(t3))
    return total / scale if scale > 0 else total


def solve_constraint_n1(alpha1: float, alpha3: float, alpha4: float) -> list[float]:
    """All real ``alpha2`` closing the n=1 constraint, ascending.

    ``lambda2`` solves ``lambda2 (lambda2 - 2 delta) = 4 alpha4 sqrt(-eps_1)``;
    with ``alpha4 > 0`` the discriminant ``delta**2 + 4 alpha4 sqrt(-eps_1)``
    cannot be negative, so two roots are returned unless they coincide.
    """
    _check_triple(alpha1, alpha3, alpha4)
    delta = 1.0 + alpha3 / (2.0 * alpha4)
    k = math.sqrt(-_energy_from_triple(1, alpha1, alpha3, alpha4))
    prod = -4.0 * alpha4 * k
    disc = delta * delta - prod
    if disc < 0:
        return []
    root = math.sqrt(disc)
    if root == 0.0:
        lams = [delta]
    else:
        big = delta + math.copysign(root, delta) if delta != 0 else root
        lams = sorted({big, prod / big})
    offset = _alpha2_offset(1, alpha1, alpha3, alpha4)
    return sorted(lam - offset for lam in lams)


def solve_alpha2_roots(n: int, alpha1: float, alpha3: float, alpha4: float) -> list[float]:
    """Every ``alpha2`` for which the degree-``n`` QES state exists, ascending.

    The determinant is ``det(lambda2 I + M0)`` with ``M0`` tridiagonal and
    off-diagonal products ``4 (k+1)(n-k) alpha4 sqrt(-eps_n) >= 0``, so ``M0``
    symmetrises and all ``n + 1`` roots are real eigenvalues.
    """
    _check_triple(alpha1, alpha3, alpha4)
    delta = 1.0 + alpha3 / (2.0 * alpha4)
    k_ = math.sqrt(-_energy_from_triple(n, alpha1, alpha3, alpha4))
    ks = np.arange(n + 1, dtype=float)
    diag = -2.0 * ks * delta - ks * (ks - 1.0)
    off = np.sqrt(4.0 * (ks[:-1] + 1.0) * (n - ks[:-1]) * alpha4 * k_)
    mat = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    lams = -np.linalg.eigvalsh(mat)
    offset = _alpha2_offset(n, alpha1, alpha3, alpha4)
    return sorted(float(lam - offset) for lam in lams)


def physical_node_position(p: PotentialParams) -> float | None:
    """Node ``-c_0/c_1`` of the n=1 polynomial, or None when it is not on ``x > 0``."""
    eps = closed_form_energy(1, p)
    coeffs, _ = recursion_polynomial(1, p, eps)
    if coeffs[1] == 0.0:
        return None
    x = -coeffs[0] / coeffs[1]
    return x if x > 0 else None


def build_wavefunction(n: int, p: PotentialParams, tol: float = CLOSURE_TOL) -> WaveFunctionSpec:
    """Closed-form state of degree ``n``; the parameters must close the constraint."""
    residual = qes_determinant_residual(n, p)
    if not abs(residual) <= tol:
        raise ConstraintViolationError(f"QES constraint for n={n} not satisfied", residual)
    eps = closed_form_energy(n, p)
    coeffs, _ = recursion_polynomial(n, p, eps)
    return WaveFunctionSpec(
        power=p.delta,
        exp_coeffs=(math.sqrt(-eps), p.alpha4, 0.0, 0.0),
        poly_coeffs=tuple(coeffs),
        label=f"ordinary n={n}",
    )


def solve_ordinary(n: int, alpha1: float, alpha3: float, alpha4: float) -> list[QesSolution]:
    """Close the degree-``n`` constraint in ``alpha2`` and build every resulting state."""
    if n == 0:
        roots = [solve_alpha2_ground(alpha1, alpha3, alpha4)]
    elif n == 1:
        roots = solve_constraint_n1(alpha1, alpha3, alpha4)
    else:
        roots = solve_alpha2_roots(n, alpha1, alpha3, alpha4)
    out = []
    for a2 in roots:
        p = PotentialParams(alpha1, a2, alpha3, alpha4)
        wf = build_wavefunction(n, p)
        out.append(
            QesSolution(
                n=n,
                params=p,
                energy=closed_form_energy(n, p),
                wavefunction=wf,
                constraint_residual=qes_determinant_residual(n, p),
            )
        )
    return out
