"""Quasi-exact and minimal-length solutions of the Coulomb-4 radial problem.

Scaled units throughout: ``2m/hbar^2 = 1`` and ``k_B = 1``.
"""
__version__ = "0.1.0"

from .core import (
    ConstraintViolationError,
    ConvergenceError,
    DomainError,
    EffectiveCoefficients,
    EnergyPair,
    GupContext,
    OverflowGuardError,
    PotentialParams,
    SingularDenominatorError,
    WaveFunctionSpec,
    effective_coefficients,
    effective_potential_value,
    evaluate_wavefunction,
    potential_value,
)
from .fixtures import REFERENCE_SETS, ReferenceSet
from .gup_solver import (
    AnsatzParams,
    GupSolution,
    ansatz_parameters,
    bethe_quartic_residual,
    bethe_residuals,
    energy_relation_residual,
    build_gup_wavefunction,
    general_condition_residuals,
    gup_energy,
    solve_first_excited_gup,
    solve_ground_gup,
)
from .heun import DchParams, dch_parameters, dch_series, polynomial_termination_check
from .oracle import GridSpec, GridTooCoarseError, OracleResult, Spacing, count_nodes, default_grid, fd_eigen_solve, normalize, ode_residual
from .ordinary_qes import (
    LambdaPair,
    QesSolution,
    build_wavefunction,
    closed_form_energy,
    first_excited_constraint_residual,
    ground_constraint_residual,
    lambda_coeffs,
    qes_determinant_residual,
    recursion_polynomial,
    solve_alpha2_ground,
    solve_constraint_n1,
    solve_ordinary,
)
from .thermo import (
    PartitionRequest,
    PartitionResult,
    erfi,
    erfi_integral,
    partition_direct,
    partition_euler_maclaurin,
    thermo_quantities,
)
