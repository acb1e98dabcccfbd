"""Domain types for the Coulomb-4 problem and the effective-potential map.

Everything is in scaled units, ``2m/hbar^2 = 1`` and ``k_B = 1``, so an
"energy" here is the scaled quantity ``eps = (2m/hbar^2) E``.

The bare potential on the half-line ``x > 0`` is::

    V(x) = alpha1/x + alpha2/x**2 + alpha3/x**3 + alpha4**2/x**4

and the minimal-length correction turns it into the nine-term inverse power
series ``V_e(x) = sum_i gamma[i] * x**-i`` (``i = 0..8``) defined by
``V_e = (V - eps_gup) + beta * (V - eps)**2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class SingularDenominatorError(ArithmeticError):
    """A closed-form expression hits a pole."""


class ConstraintViolationError(ValueError):
    """Potential parameters do not satisfy the required closure constraint."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its budget."""

    def __init__(self, message: str, residual: float = math.nan, attempts: int = 0):
        super().__init__(f"{message} (last residual={residual:.3e}, attempts={attempts})")
        self.residual = residual
        self.attempts = attempts


class OverflowGuardError(OverflowError):
    """An exponent would overflow double precision."""


@dataclass(frozen=True)
class PotentialParams:
    """Couplings of the Coulomb-4 potential.

    ``alpha4`` is stored as a length scale; the potential uses ``alpha4**2``.
    """

    alpha1: float
    alpha2: float
    alpha3: float
    alpha4: float

    def __post_init__(self):
        if not self.alpha1 < 0:
            raise DomainError(f"alpha1 must be negative, got {self.alpha1}")
        if not self.alpha4 > 0:
            raise DomainError(f"alpha4 must be positive, got {self.alpha4}")

    @property
    def delta(self) -> float:
        """Power-law exponent ``1 + alpha3 / (2 alpha4)`` of the ordinary ansatz."""
        return 1.0 + self.alpha3 / (2.0 * self.alpha4)

    @property
    def admissible(self) -> bool:
        """True when the ordinary-case ansatz is usable (``delta > 0``)."""
        return self.alpha3 > -2.0 * self.alpha4

    def with_alpha2(self, alpha2: float) -> "PotentialParams":
        return PotentialParams(self.alpha1, float(alpha2), self.alpha3, self.alpha4)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha1, self.alpha2, self.alpha3, self.alpha4)


@dataclass(frozen=True)
class GupContext:
    """Minimal-length parameter ``beta`` in ``[0, 1]``."""

    beta: float

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [0, 1], got {self.beta}")


@dataclass(frozen=True)
class EnergyPair:
    eps_ordinary: float
    eps_gup: float
    n: int = 0


@dataclass(frozen=True)
class EffectiveCoefficients:
    """``gamma[i]`` is the coefficient of ``x**-i`` in the effective potential."""

    gamma: tuple[float, ...]

    def __post_init__(self):
        if len(self.gamma) != 9:
            raise ValueError("exactly nine gamma coefficients are required")

    def __getitem__(self, i: int) -> float:
        return self.gamma[i]

    def __iter__(self):
        return iter(self.gamma)


@dataclass
class WaveFunctionSpec:
    """Closed-form bound state ``x**power * exp(-a x - b/x - c/x**2 - d/x**3) * poly(x)``.

    ``poly_coeffs`` are in ascending powers of ``x``.
    """

    power: float
    exp_coeffs: tuple[float, float, float, float]
    poly_coeffs: tuple[float, ...]
    norm_constant: Optional[float] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        self.exp_coeffs = tuple(float(v) for v in self.exp_coeffs)
        self.poly_coeffs = tuple(float(v) for v in self.poly_coeffs)
        if len(self.exp_coeffs) != 4:
            raise ValueError("exp_coeffs must hold (a, b, c, d)")
        if not self.poly_coeffs or not any(self.poly_coeffs):
            raise DomainError("polynomial factor must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.poly_coeffs) - 1

    def log_prefactor(self, x):
        """``log(x**power) + g(x)``; the prefactor is strictly positive."""
        a, b, c, d = self.exp_coeffs
        x = np.asarray(x, dtype=float)
        return self.power * np.log(x) - a * x - b / x - c / x**2 - d / x**3

    def log_prefactor_derivatives(self, x):
        """First and second derivatives of :meth:`log_prefactor`."""
        a, b, c, d = self.exp_coeffs
        x = np.asarray(x, dtype=float)
        inv = 1.0 / x
        g1 = self.power * inv - a + inv**2 * (b + inv * (2.0 * c + inv * 3.0 * d))
        g2 = -(inv**2) * (self.power + inv * (2.0 * b + inv * (6.0 * c + inv * 12.0 * d)))
        return g1, g2


def _check_positive(x):
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError("x must be strictly positive")
    return arr


def _scalar_or_array(value, like):
    return float(value) if np.ndim(like) == 0 else value


def potential_value(p: PotentialParams, x):
    """Scaled Coulomb-4 potential ``(2m/hbar^2) V(x)``; vectorised over ``x``."""
    arr = _check_positive(x)
    inv = 1.0 / arr
    v = inv * (p.alpha1 + inv * (p.alpha2 + inv * (p.alpha3 + inv * p.alpha4**2)))
    return _scalar_or_array(v, x)


def effective_coefficients(p: PotentialParams, g: GupContext, e: EnergyPair) -> EffectiveCoefficients:
    """Coefficients of ``(V - eps_gup) + beta (V - eps)^2`` in powers of ``1/x``."""
    a1, a2, a3, a4 = p.as_tuple()
    beta = g.beta
    eps, epsg = e.eps_ordinary, e.eps_gup
    a4sq = a4 * a4
    gamma = (
        beta * eps**2 - epsg,
        a1 * (1.0 - 2.0 * beta * eps),
        a2 + beta * (a1**2 - 2.0 * a2 * eps),
        a3 + 2.0 * beta * (a1 * a2 - a3 * eps),
        a4sq + beta * (2.0 * a1 * a3 + a2**2 - 2.0 * a4sq * eps),
        2.0 * beta * (a1 * a4sq + a2 * a3),
        beta * (2.0 * a2 * a4sq + a3**2),
        2.0 * beta * a3 * a4sq,
        beta * a4sq**2,
    )
    return EffectiveCoefficients(tuple(float(v) for v in gamma))


def effective_potential_value(gamma: EffectiveCoefficients | Sequence[float], x):
    """Horner evaluation of ``sum_i gamma[i] x**-i``."""
    coeffs = tuple(gamma)
    arr = _check_positive(x)
    inv = 1.0 / arr
    acc = np.zeros_like(arr) + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * inv + c
    return _scalar_or_array(acc, x)


def evaluate_wavefunction(spec: WaveFunctionSpec, x):
    """Value of the closed-form state at ``x > 0``; underflows to 0 near the ends."""
    arr = _check_positive(x)
    with np.errstate(under="ignore", over="ignore"):
        pref = np.exp(spec.log_prefactor(arr))
    val = pref * np.polynomial.polynomial.polyval(arr, spec.poly_coeffs)
    if spec.norm_constant is not None:
        val = val * spec.norm_constant
    return _scalar_or_array(val, x)
