"""Bound states with a minimal-length correction.

With the deformation parameter beta > 0 the radial equation picks up a
quartic term in the momentum. Its quasi-exact states fix a2, a3 and a4 in
terms of (a1, beta) through a small nonlinear system that we solve by Newton.

Run: python demos/03_minimal_length.py
"""
import math

import numpy as np

from coulomb4 import bethe_quartic_residual, build_gup_wavefunction, gup_energy, solve_first_excited_gup, solve_ground_gup
from coulomb4.oracle import count_nodes, default_grid

# %% Ground states exist only for -2/(3 sqrt(beta)) < a1 < 0.
for a1, beta in [(-0.5, 1.0), (-0.3, 0.5), (-0.1, 0.8)]:
    s = solve_ground_gup(a1, beta)
    print(f"a1={a1:+.2f} beta={beta:.1f}: a2={s.alpha2:.6g} a3={s.alpha3:.6g} a4={s.alpha4:.6g} "
          f"eps={s.eps_ordinary:.6g} eps_G={s.eps_gup:.6g} |r|={s.residual_norm:.1e}")

# %% First excited states: each Bethe root is the position of the node.
for s in solve_first_excited_gup(-0.3, 0.5):
    wf = build_gup_wavefunction(s)
    x = default_grid(wf).nodes()
    nodes = count_nodes(np.polynomial.Polynomial(wf.poly_coeffs)(x))
    print(f"excited: root {s.bethe_roots[0]:.6g}  quartic residual {bethe_quartic_residual(s):.1e}  nodes {nodes}")

# %% The energy formula reduces to the Coulomb-like value as beta -> 0.
for beta in (1e-1, 1e-3, 1e-6, 0.0):
    print(f"beta={beta:g}: eps_G={gup_energy(0, -0.01, -0.5, beta):.10f}  (beta=0 limit {-0.25 / 16:.10f})")
print("ground a1 window at beta=1:", (-2 / (3 * math.sqrt(1.0)), 0.0))
