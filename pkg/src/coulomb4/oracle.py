"""Brute-force checks that do not rely on the closed forms.

* :func:`fd_eigen_solve` discretises ``-d^2/dx^2 + V(x)`` on ``[x_lo, x_hi]``
  with Dirichlet ends. On a logarithmic grid the substitution
  ``x = e^u``, ``psi = x^{1/2} chi``, ``y = x chi`` keeps the matrix symmetric
  tridiagonal::

      diag_i = (2/h^2 + 1/4) / x_i^2 + V(x_i)
      off_i  = -1 / (h^2 x_i x_{i+1})

  Eigenvalues come from Sturm-sequence bisection (LAPACK ``stebz``) and the
  eigenvectors from inverse iteration.
* :func:`ode_residual` differentiates a closed-form state analytically.
* :func:`normalize` integrates ``|psi|^2`` with composite Simpson.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Union

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import eigh_tridiagonal

from .core import (
    DomainError,
    EffectiveCoefficients,
    WaveFunctionSpec,
    effective_potential_value,
)

DEFAULT_POINTS = 20000
DECAY_EXPONENT = 35.0
TAIL_DECAY_LENGTHS = 40.0


class Spacing(str, enum.Enum):
    UNIFORM = "uniform"
    LOGARITHMIC = "logarithmic"


class GridTooCoarseError(RuntimeError):
    pass


@dataclass(frozen=True)
class GridSpec:
    x_lo: float
    x_hi: float
    points: int = DEFAULT_POINTS
    spacing: Spacing = Spacing.LOGARITHMIC

    def __post_init__(self):
        if not self.x_lo > 0:
            raise DomainError("x_lo must be positive")
        if not self.x_hi > self.x_lo:
            raise DomainError("x_hi must exceed x_lo")
        if self.points < 1000:
            raise DomainError("at least 1000 grid points are required")
        object.__setattr__(self, "spacing", Spacing(self.spacing))

    def nodes(self) -> np.ndarray:
        if self.spacing is Spacing.UNIFORM:
            return np.linspace(self.x_lo, self.x_hi, self.points)
        return np.geomspace(self.x_lo, self.x_hi, self.points)

    @property
    def step(self) -> float:
        """Spacing in ``x`` (uniform) or in ``log x`` (logarithmic)."""
        if self.spacing is Spacing.UNIFORM:
            return (self.x_hi - self.x_lo) / (self.points - 1)
        return math.log(self.x_hi / self.x_lo) / (self.points - 1)

    def coarse_nodes(self) -> np.ndarray:
        """Nodes at twice the step, used for the Richardson estimate."""
        m = (self.points - 1) // 2 + 1
        if self.spacing is Spacing.UNIFORM:
            return np.linspace(self.x_lo, self.x_hi, m)
        return np.geomspace(self.x_lo, self.x_hi, m)


@dataclass
class OracleResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # psi on the interior nodes, one column per state
    x: np.ndarray
    node_counts: list[int]
    grid: GridSpec
    richardson_error: np.ndarray = field(default_factory=lambda: np.zeros(0))


Potential = Union[Callable[[np.ndarray], np.ndarray], EffectiveCoefficients]


def _as_callable(potential: Potential) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(potential, EffectiveCoefficients):
        return lambda x: effective_potential_value(potential, x)
    return potential


def tridiagonal_operator(potential: Potential, grid: GridSpec, nodes: np.ndarray | None = None):
    """Symmetric tridiagonal matrix ``(diag, off)`` and the interior nodes."""
    V = _as_callable(potential)
    x_all = grid.nodes() if nodes is None else nodes
    x = x_all[1:-1]
    if grid.spacing is Spacing.UNIFORM:
        h = (x_all[-1] - x_all[0]) / (x_all.size - 1)
    else:
        h = math.log(x_all[-1] / x_all[0]) / (x_all.size - 1)
    v = np.asarray(V(x), dtype=float)
    if not np.all(np.isfinite(v)):
        raise DomainError("potential is not finite on the grid")
    if grid.spacing is Spacing.UNIFORM:
        diag = 2.0 / h**2 + v
        off = np.full(x.size - 1, -1.0 / h**2)
    else:
        diag = (2.0 / h**2 + 0.25) / x**2 + v
        off = -1.0 / (h**2 * x[:-1] * x[1:])
    return diag, off, x


def sturm_count(diag, off, sigma: float) -> int:
    """Number of eigenvalues strictly below ``sigma`` (LDL^T pivot signs)."""
    count = 0
    q = 1.0
    tiny = np.finfo(float).tiny
    for i in range(len(diag)):
        e2 = off[i - 1] ** 2 if i else 0.0
        q = diag[i] - sigma - (e2 / q if i else 0.0)
        if q == 0.0:
            q = -tiny
        if q < 0:
            count += 1
    return count


def count_nodes(values) -> int:
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        raise DomainError("need at least three samples")
    cut = 1e-12 * np.max(np.abs(v))
    s = np.sign(v[np.abs(v) > cut])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _lowest(diag, off, k: int, vectors: bool):
    if k > diag.size:
        raise DomainError(f"requested {k} states but the grid only resolves {diag.size}")
    out = eigh_tridiagonal(
        diag, off, eigvals_only=not vectors, select="i", select_range=(0, k - 1), lapack_driver="stebz",
        tol=np.finfo(float).tiny,
    )
    return out


def fd_eigen_solve(potential: Potential, grid: GridSpec, k: int = 1, tol: float | None = None) -> OracleResult:
    """Lowest ``k`` eigenpairs of ``-d^2/dx^2 + V`` with a Richardson error estimate."""
    if k < 1:
        raise DomainError("k must be positive")
    diag, off, x = tridiagonal_operator(potential, grid)
    evals, evecs = _lowest(diag, off, k, vectors=True)
    if grid.spacing is Spacing.LOGARITHMIC:
        evecs = evecs / np.sqrt(x)[:, None]
    cd, co, _ = tridiagonal_operator(potential, grid, grid.coarse_nodes())
    coarse_evals = _lowest(cd, co, k, vectors=False)
    richardson = np.abs(evals - coarse_evals) / 3.0
    if tol is not None and np.any(richardson > tol):
        raise GridTooCoarseError(f"Richardson estimate {richardson.max():.3e} exceeds {tol:.3e}")
    nodes = [count_nodes(evecs[:, j]) for j in range(k)]
    return OracleResult(np.asarray(evals), evecs, x, nodes, grid, richardson)


def default_grid(spec: WaveFunctionSpec, points: int = DEFAULT_POINTS, spacing=Spacing.LOGARITHMIC) -> GridSpec:
    """Domain on which the closed-form state is negligible outside.

    ``x_lo`` is where the log of the prefactor has fallen 35 below its peak,
    ``x_hi = 40/a`` past the outermost real root of the polynomial factor.
    """
    a = spec.exp_coeffs[0]
    if not a > 0:
        raise DomainError("the state must decay at infinity (a > 0)")
    roots = np.polynomial.polynomial.polyroots(spec.poly_coeffs) if spec.degree else np.zeros(0)
    real = [r.real for r in np.atleast_1d(roots) if abs(r.imag) < 1e-12 and r.real > 0]
    x_hi = TAIL_DECAY_LENGTHS / a + (max(real) if real else 0.0)
    probe = np.geomspace(1e-12, x_hi, 20000)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        lp = spec.log_prefactor(probe)
    lp = np.where(np.isfinite(lp), lp, -np.inf)
    peak = int(np.argmax(lp))
    below = np.nonzero(lp[: peak + 1] <= lp[peak] - DECAY_EXPONENT)[0]
    x_lo = probe[below[-1]] if below.size else probe[0]
    return GridSpec(float(x_lo), float(x_hi), points, spacing)


def _analytic_parts(spec: WaveFunctionSpec, x):
    """Prefactor-free pieces: ``psi = pref * P`` and ``psi'' = pref * u``."""
    P = np.polynomial.Polynomial(spec.poly_coeffs)
    g1, g2 = spec.log_prefactor_derivatives(x)
    p0, p1, p2 = P(x), P.deriv(1)(x), P.deriv(2)(x)
    u = p0 * (g2 + g1 * g1) + 2.0 * g1 * p1 + p2
    return p0, u


def ode_residual(spec: WaveFunctionSpec, effective_potential: Potential, grid: GridSpec, pointwise: bool = False):
    """Largest relative residual of ``-psi'' + V_e psi`` over interior grid nodes.

    The positive prefactor cancels from numerator and denominator, which keeps
    the ratio meaningful where ``psi`` itself underflows.
    """
    x = grid.nodes()[1:-1]
    V = np.asarray(_as_callable(effective_potential)(x), dtype=float)
    p0, u = _analytic_parts(spec, x)
    num = np.abs(-u + V * p0)
    den = np.abs(V * p0) + np.abs(u) + 1e-300
    r = num / den
    return r if pointwise else float(np.max(r))


def _integrable(spec: WaveFunctionSpec) -> bool:
    a, b, c, d = spec.exp_coeffs
    if not a > 0:
        return False
    for coeff in (d, c, b):
        if coeff != 0.0:
            return coeff > 0
    return 2.0 * spec.power > -1.0


def normalize(spec: WaveFunctionSpec, grid: GridSpec):
    """``(1/sqrt(norm), norm)`` with ``norm`` the Simpson integral of ``|psi|^2``."""
    if not _integrable(spec):
        raise DomainError("state is not square integrable on (0, inf)")
    x = grid.nodes()
    unnormed = replace(spec, norm_constant=None)
    with np.errstate(under="ignore"):
        lp = unnormed.log_prefactor(x)
        dens = np.exp(2.0 * lp) * np.polynomial.polynomial.polyval(x, spec.poly_coeffs) ** 2
    if grid.spacing is Spacing.UNIFORM:
        norm = simpson(dens, x=x)
    else:
        norm = simpson(dens * x, x=np.log(x))
    if not (np.isfinite(norm) and norm > 0):
        raise DomainError("normalisation integral is not finite and positive")
    return 1.0 / math.sqrt(norm), float(norm)


def normalized(spec: WaveFunctionSpec, grid: GridSpec | None = None) -> WaveFunctionSpec:
    grid = grid or default_grid(spec)
    const, _ = normalize(spec, grid)
    return replace(spec, norm_constant=const)
