"""Canonical partition function of the closed-form levels.

Z(T) = sum_{n<=nu} exp(-eps_n / T). The sum is short, so the direct value is
the reference; Euler-Maclaurin with an erfi-based integral is the analytic
approximation, and it is only as good as the summand is smooth in n.

Run: python demos/05_partition_function.py
"""
import numpy as np

from coulomb4 import PartitionRequest, PotentialParams, REFERENCE_SETS, partition_euler_maclaurin, thermo_quantities

# %% A smooth case: a3/a4 = 1, so the levels vary slowly with n.
p = PotentialParams(-0.5, 0.0, 0.02, 0.02)
for T in (0.5, 1.0, 4.0):
    for k in (1, 2, 3):
        r = partition_euler_maclaurin(PartitionRequest(p, T, 10, k))
        print(f"T={T:3.1f} k={k}: Z={r.z_direct:.12g}  EM={r.z_euler_maclaurin:.12g}  "
              f"|err|={abs(r.z_euler_maclaurin - r.z_direct):.1e}  remainder~{r.remainder_estimate:.1e}")

# %% G1 has a3 close to -2 a4, so eps_0 sits near a pole in n and the
# correction series stops being useful: the remainder estimate says so.
r = partition_euler_maclaurin(PartitionRequest(REFERENCE_SETS["G1"].closed_params(), 1.0, 10, 2))
print(f"G1: Z={r.z_direct:.6g}  EM={r.z_euler_maclaurin:.6g}  remainder~{r.remainder_estimate:.3g}")

# %% Free energy, internal energy, heat capacity and entropy on a log grid.
for row in thermo_quantities(p, np.geomspace(0.2, 5.0, 7), 10)[1:-1]:
    print(f"T={row.T:.3f}  F={row.F:+.5f}  U={row.U:+.5f}  C={row.C:.5f}  S={row.S:.5f}")
