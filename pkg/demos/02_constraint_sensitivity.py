"""How much four printed decimals matter for the first excited constraint.

E1 has a4 = 0.0029. Shifting a3 or a4 by half a unit in the last printed
digit moves the exact a2 by far more than the printed precision, which is why
the term-normalized residual at the printed point is of order one.

Run: python demos/02_constraint_sensitivity.py
"""
import numpy as np

from coulomb4 import REFERENCE_SETS, first_excited_constraint_residual, solve_constraint_n1
from coulomb4.fixtures import ROUNDING

for name in ("E1", "E2", "E3"):
    ref = REFERENCE_SETS[name]
    lo, hi = ref.alpha2_rounding_range()
    print(f"{name}: printed a2 {ref.params.alpha2:+.4f}, exact range over rounding box [{lo:+.5f}, {hi:+.5f}], "
          f"normalized residual {first_excited_constraint_residual(ref.params):+.3g}")

# %% Sweep a3 and a4 across E1's rounding interval. a3 = -0.0002 is tiny next
# to its own rounding, so it dominates the spread of the smaller root.
p = REFERENCE_SETS["E1"].params
for u in np.linspace(-ROUNDING, ROUNDING, 5):
    print(f"a3={p.alpha3 + u:+.6f}  a2={solve_constraint_n1(p.alpha1, p.alpha3 + u, p.alpha4)[0]:+.5f}   "
          f"a4={p.alpha4 + u:.6f}  a2={solve_constraint_n1(p.alpha1, p.alpha3, p.alpha4 + u)[0]:+.5f}")

# %% The same scan is available from the command line; for the full E-family cloud:
#   coulomb4 scan --n 1 --alpha1 -0.2 --alpha3-range -0.0102,0,103 --alpha4-range 0.0029,0.0569,541
