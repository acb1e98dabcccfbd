"""Double-confluent Heun form of the ordinary equation.

Substituting ``y = 2 sqrt(-eps) x`` into the transformed ordinary equation gives::

    y^2 phi'' + (-y^2 + rho y + eta) phi' - (omega y + lambda2) phi = 0

with ``rho = 2 + alpha3/alpha4``, ``eta = 4 alpha4 sqrt(-eps)`` and
``omega = 1 + alpha1/(2 sqrt(-eps)) + alpha3/(2 alpha4)``. The series below is
in powers of ``y``. Both ``y = 0`` and ``y = inf`` are irregular singular
points, so away from the polynomial (QES) cases the power series is only
asymptotic: its coefficients grow factorially and partial sums do not
converge for any ``y > 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, PotentialParams
from .ordinary_qes import lambda_coeffs

DEFAULT_TERMS = 60


@dataclass(frozen=True)
class DchParams:
    rho: float
    eta: float
    omega: float
    lambda2: float


def dch_parameters(p: PotentialParams, eps: float) -> DchParams:
    if not eps < 0:
        raise DomainError(f"energy must be negative, got {eps}")
    k = math.sqrt(-eps)
    r = p.alpha3 / p.alpha4
    return DchParams(
        rho=2.0 + r,
        eta=4.0 * p.alpha4 * k,
        omega=1.0 + p.alpha1 / (2.0 * k) + 0.5 * r,
        lambda2=lambda_coeffs(p, eps).lambda2,
    )


def dch_series(d: DchParams, N: int = DEFAULT_TERMS) -> np.ndarray:
    """Coefficients ``h_0..h_N`` of the solution regular at the origin, ``h_0 = 1``."""
    if d.eta == 0.0:
        raise ZeroDivisionError("eta = 0: the recursion divides by eta")
    if N < 0:
        raise DomainError("N must be non-negative")
    h = np.zeros(N + 1)
    h[0] = 1.0
    if N >= 1:
        h[1] = d.lambda2 / d.eta
    for m in range(N - 1):
        h[m + 2] = (
            (d.lambda2 - m * (m + d.rho + 1.0) - d.rho) * h[m + 1] + (m + d.omega) * h[m]
        ) / ((m + 2) * d.eta)
    return h


def polynomial_termination_check(d: DchParams, m: int, omega_tol: float = 1e-10, h_tol: float = 1e-8):
    """Whether the series truncates to a degree-``m`` polynomial.

    Needs ``m + omega = 0`` and ``h_{m+1} = 0`` at once; ``h_{m+1}`` is judged
    relative to ``max |h_k|`` for ``k <= m``. Returns ``(ok, residual)``.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    h = dch_series(d, m + 1)
    scale = float(np.max(np.abs(h[: m + 1])))
    h_res = abs(h[m + 1]) / scale
    w_res = abs(m + d.omega)
    ok = w_res <= omega_tol and h_res <= h_tol
    return ok, max(w_res, h_res)


def evaluate_series(h, y):
    """Partial sum ``sum_k h_k y^k``."""
    return np.polynomial.polynomial.polyval(np.asarray(y, dtype=float), h)


def series_ode_residual(d: DchParams, h, y):
    """Left side of the DCH equation applied to the partial sum with coefficients ``h``.

    For a partial sum of length ``N+1`` built by :func:`dch_series` this
    equals ``-eta (N+1) h_{N+1} y^N - (N + omega) h_N y^{N+1}`` exactly,
    which vanishes only when the series terminates.
    """
    P = np.polynomial.Polynomial(np.asarray(h, dtype=float))
    y = np.asarray(y, dtype=float)
    dP, d2P = P.deriv(1), P.deriv(2)
    return y**2 * d2P(y) + (-(y**2) + d.rho * y + d.eta) * dP(y) - (d.omega * y + d.lambda2) * P(y)


def evaluate_with_convergence(d: DchParams, y, N: int = DEFAULT_TERMS, rtol: float = 1e-10):
    """Evaluate the series with ``N`` and ``2N`` terms.

    Returns ``(value, converged)``; ``converged`` is False whenever the two
    partial sums disagree beyond ``rtol``, which is the generic situation
    for a non-terminating DCH series.
    """
    h2 = dch_series(d, 2 * N)
    with np.errstate(over="ignore", invalid="ignore"):
        v1 = evaluate_series(h2[: N + 1], y)
        v2 = evaluate_series(h2, y)
    ok = np.all(np.isfinite(v2)) and np.allclose(v1, v2, rtol=rtol, atol=0.0)
    return v2, bool(ok)


def rescaled_lie_coefficients(d: DchParams, eps: float, degree: int) -> np.ndarray:
    """``h_k (2 sqrt(-eps))^k`` for ``k <= degree``: the series in ``x`` rather than ``y``."""
    h = dch_series(d, degree)
    scale = 2.0 * math.sqrt(-eps)
    return h * scale ** np.arange(degree + 1)
