"""Bound-state partition function of the ordinary QES spectrum.

The summand is ``f(n) = exp(A / s(n)^2)`` with ``A = alpha1^2 alpha4^2 / T``
and ``s(n) = alpha3 + 2(n+1) alpha4``. The sum up to the cutoff ``nu`` is
approximated with Euler-Maclaurin; the integral has a closed form in ``erfi``
and the odd derivatives of ``f`` are exact: ``f^(k) = f * P_k(1/s)`` for
polynomials ``P_k`` generated by ``P_{k+1} = -4 A alpha4 t^3 P_k - 2 alpha4 t^2 P_k'``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import dawsn

from .core import DomainError, OverflowGuardError, PotentialParams, SingularDenominatorError

# B_2 .. B_10; B_10 only feeds the remainder estimate at the top order
BERNOULLI_EVEN = (Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66))
MAX_EM_ORDER = 4
ERFI_LIMIT = 26.0
EXPONENT_LIMIT = 700.0


@dataclass(frozen=True)
class PartitionRequest:
    params: PotentialParams
    temperature: float
    nu: int
    em_order: int = 2

    def __post_init__(self):
        if not self.temperature > 0:
            raise DomainError("temperature must be positive")
        if self.nu < 0 or int(self.nu) != self.nu:
            raise DomainError("nu must be a non-negative integer")
        if not 1 <= self.em_order <= MAX_EM_ORDER:
            raise DomainError(f"em_order must be in [1, {MAX_EM_ORDER}]")


@dataclass
class PartitionResult:
    z_direct: float
    z_euler_maclaurin: float
    integral_term: float
    boundary_term: float
    correction_terms: list[float] = field(default_factory=list)
    remainder_estimate: float = 0.0


def erfi(z):
    """Imaginary error function through Dawson's integral, ``2/sqrt(pi) e^{z^2} D(z)``."""
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(z) > ERFI_LIMIT):
        raise OverflowGuardError(f"|z| > {ERFI_LIMIT}: erfi overflows double precision")
    a = np.abs(z)
    out = np.sign(z) * (2.0 / math.sqrt(math.pi)) * np.exp(a * a) * dawsn(a)
    return float(out) if out.ndim == 0 else out


def _levels(a1: float, a3: float, a4: float, T: float, n):
    s = a3 + 2.0 * (np.asarray(n, dtype=float) + 1.0) * a4
    if np.any(s == 0):
        raise SingularDenominatorError("alpha3 + 2(n+1) alpha4 vanishes inside the sum")
    return (a1 * a4) ** 2 / T / s**2


def _summand(a1, a3, a4, T, n):
    expo = _levels(a1, a3, a4, T, n)
    if np.any(expo > EXPONENT_LIMIT):
        raise OverflowGuardError("partition exponent exceeds 700")
    return np.exp(expo)


def partition_direct(req: PartitionRequest) -> float:
    """Truncated sum ``sum_{n<=nu} exp(-eps_n / T)`` with compensated summation."""
    p = req.params
    terms = _summand(p.alpha1, p.alpha3, p.alpha4, req.temperature, np.arange(req.nu + 1))
    return math.fsum(terms)


def _derivative_polys(A: float, a4: float, order: int) -> list[Polynomial]:
    """``P_0..P_order`` with ``f^(k)(n) = f(n) P_k(1/s(n))``."""
    t = Polynomial([0.0, 1.0])
    polys = [Polynomial([1.0])]
    for _ in range(order):
        P = polys[-1]
        polys.append(-4.0 * A * a4 * t**3 * P - 2.0 * a4 * t**2 * P.deriv())
    return polys


def summand_derivative(a1: float, a3: float, a4: float, T: float, n: float, order: int) -> float:
    """Analytic ``order``-th derivative in ``n`` of ``exp(alpha1^2 alpha4^2 / (T s(n)^2))``."""
    A = (a1 * a4) ** 2 / T
    s = a3 + 2.0 * (n + 1.0) * a4
    P = _derivative_polys(A, a4, order)[order]
    return float(math.exp(A / s**2) * P(1.0 / s))


def _erfi_integral_raw(a1: float, a3: float, a4: float, T: float, nu: float) -> float:
    xi = a3 + 2.0 * a4
    if xi == 0.0:
        raise SingularDenominatorError("xi1 = alpha3 + 2 alpha4 vanishes")
    if a4 == 0.0:
        raise SingularDenominatorError("alpha4 = 0")
    rt = math.sqrt(T)
    top = 2.0 * a4 * nu + xi
    c = a1 * a4 / rt
    erfi_part = math.sqrt(math.pi) * a1 * (erfi(c / xi) - erfi(c / top)) / (2.0 * rt)
    with np.errstate(over="raise"):
        exp_part = (top * math.exp(c * c / top**2) - xi * math.exp(c * c / xi**2)) / (2.0 * a4)
    return erfi_part + exp_part


def erfi_integral(params: PotentialParams, T: float, nu: float) -> float:
    """Closed form of ``int_0^nu f(x) dx``."""
    if not T > 0:
        raise DomainError("temperature must be positive")
    return _erfi_integral_raw(params.alpha1, params.alpha3, params.alpha4, T, nu)


def _euler_maclaurin(a1, a3, a4, T, nu, k, integral=None) -> PartitionResult:
    A = (a1 * a4) ** 2 / T
    polys = _derivative_polys(A, a4, 2 * k + 1)

    def deriv(n, order):
        s = a3 + 2.0 * (n + 1.0) * a4
        return math.exp(A / s**2) * polys[order](1.0 / s)

    f0, fn = deriv(0.0, 0), deriv(float(nu), 0)
    if integral is None:
        integral = _erfi_integral_raw(a1, a3, a4, T, nu)
    boundary = 0.5 * (f0 + fn)
    corrections = []
    for m in range(1, k + 2):
        b2m = float(BERNOULLI_EVEN[m - 1])
        corrections.append(b2m / math.factorial(2 * m) * (deriv(nu, 2 * m - 1) - deriv(0.0, 2 * m - 1)))
    used, omitted = corrections[:k], corrections[k]
    z_em = integral + boundary + math.fsum(used)
    direct = math.fsum(math.exp(A / (a3 + 2.0 * (j + 1.0) * a4) ** 2) for j in range(int(nu) + 1))
    return PartitionResult(
        z_direct=direct,
        z_euler_maclaurin=z_em,
        integral_term=integral,
        boundary_term=boundary,
        correction_terms=used,
        remainder_estimate=abs(omitted),
    )


def partition_euler_maclaurin(req: PartitionRequest) -> PartitionResult:
    """Euler-Maclaurin estimate of the truncated sum, next to the direct value.

    ``remainder_estimate`` is the magnitude of the first omitted correction.
    """
    p = req.params
    _summand(p.alpha1, p.alpha3, p.alpha4, req.temperature, np.arange(req.nu + 1))
    return _euler_maclaurin(p.alpha1, p.alpha3, p.alpha4, req.temperature, req.nu, req.em_order)


def euler_maclaurin_constant_check(nu: int, k: int = 2) -> PartitionResult:
    """Euler-Maclaurin with ``alpha1 = 0`` (``f = 1``); the sum is exactly ``nu + 1``."""
    return _euler_maclaurin(0.0, 0.0, 1.0, 1.0, nu, k)


@dataclass
class ThermoRow:
    T: float
    Z: float
    F: float
    U: float = math.nan
    C: float = math.nan
    S: float = math.nan


def _three_point(xm, x0, xp, fm, f0, fp):
    """First and second derivative at ``x0`` from the quadratic through three nodes."""
    hm, hp = x0 - xm, xp - x0
    d1 = (-hp / (hm * (hm + hp))) * fm + ((hp - hm) / (hm * hp)) * f0 + (hm / (hp * (hm + hp))) * fp
    d2 = 2.0 * (fm / (hm * (hm + hp)) - f0 / (hm * hp) + fp / (hp * (hm + hp)))
    return d1, d2


def thermo_quantities(params: PotentialParams, T_grid, nu: int) -> list[ThermoRow]:
    """``Z, F, U, C, S`` on a temperature grid.

    Derivatives are three-point central differences in ``b = 1/T``:
    ``U = -d ln Z / db`` and ``C = b^2 d^2 ln Z / db^2``. Endpoint rows carry
    ``Z`` and ``F`` only.
    """
    T = np.asarray(T_grid, dtype=float)
    if T.ndim != 1 or T.size < 3:
        raise DomainError("need at least three temperatures")
    if np.any(np.diff(T) <= 0) or np.any(T <= 0):
        raise DomainError("temperatures must be positive and strictly increasing")
    Z = np.array([partition_direct(PartitionRequest(params, float(t), nu)) for t in T])
    lnZ = np.log(Z)
    F = -T * lnZ
    b = 1.0 / T
    rows = [ThermoRow(float(t), float(z), float(f)) for t, z, f in zip(T, Z, F)]
    for i in range(1, T.size - 1):
        # b decreases with T; the quadratic fit does not care about ordering
        d1, d2 = _three_point(b[i + 1], b[i], b[i - 1], lnZ[i + 1], lnZ[i], lnZ[i - 1])
        U = -d1
        rows[i].U = float(U)
        rows[i].C = float(b[i] ** 2 * d2)
        rows[i].S = float((U - F[i]) / T[i])
    return rows
