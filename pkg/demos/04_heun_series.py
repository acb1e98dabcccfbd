"""The same eigenfunctions seen as double confluent Heun series.

After peeling off the asymptotic factors, the polynomial part solves a DCH
equation in y = 2 sqrt(-eps) x. Its power series terminates exactly on the
quasi-exact states; anywhere else the coefficients grow factorially.

Run: python demos/04_heun_series.py
"""
import numpy as np

from coulomb4 import REFERENCE_SETS, closed_form_energy, dch_parameters, dch_series
from coulomb4.heun import DchParams, evaluate_with_convergence, rescaled_lie_coefficients

# %% Termination on the reference sets: omega = -n and h_{n+1} vanishes.
for ref in REFERENCE_SETS.values():
    p = ref.closed_params()
    eps = closed_form_energy(ref.n, p)
    d = dch_parameters(p, eps)
    h = dch_series(d, ref.n + 1)
    print(f"{ref.name}: omega+n={d.omega + ref.n:+.1e}  |h_(n+1)|/max|h|={abs(h[-1]) / np.max(np.abs(h[:-1])):.1e}  "
          f"x-coefficients {rescaled_lie_coefficients(d, eps, ref.n)}")

# %% Off the constraint the series is only asymptotic. Doubling the number of
# terms changes the partial sum, and the coefficients blow up.
d = DchParams(rho=2.5, eta=0.3, omega=-0.4, lambda2=0.7)
h = dch_series(d, 40)
print("|h_k| at k = 10, 20, 40:", [f"{abs(h[k]):.2e}" for k in (10, 20, 40)])
print("converged at y=0.05?", evaluate_with_convergence(d, 0.05, N=20)[1])

# %% An exactly terminating case in integer arithmetic: degree one.
d = DchParams(rho=2.0, eta=3.0, omega=-1.0, lambda2=3.0)
print("terminating coefficients:", dch_series(d, 4))
