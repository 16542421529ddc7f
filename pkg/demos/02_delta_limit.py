"""
Delta potential as the thin-well limit
======================================

A delta barrier of strength alpha is the eps -> 0 limit of a square well
of half-width eps and height alpha/(2 eps).  This script shows the
numeric thin-well scattering matrix converging to the delta closed form
at first order in eps: each time eps shrinks by 10x, so does the error.
"""

import numpy as np

from scatter1d.smatrix import analytic_delta, delta_as_well_limit

alpha, energy = 2.0, 1.0
exact = analytic_delta(alpha, energy)

print(f"delta strength alpha={alpha}, E={energy}")
print(f"exact s11 = {exact.s11:.6f}, s12 = {exact.s12:.6f}")
print(f"\n{'eps':>8} {'max entry error':>16} {'ratio':>7}")
previous = None
for eps in (1e-1, 1e-2, 1e-3, 1e-4):
    approx = delta_as_well_limit(alpha, energy, eps=eps)
    err = float(np.max(np.abs(approx.as_matrix() - exact.as_matrix())))
    ratio = "" if previous is None else f"{previous / err:7.2f}"
    print(f"{eps:8.0e} {err:16.3e} {ratio:>7}")
    previous = err

# The limit is not free: reflection off a delta persists at every energy.
print(f"\n|r|^2 at E=1: {abs(exact.s11)**2:.4f} (alpha^2 / (alpha^2 + 4 E))")
