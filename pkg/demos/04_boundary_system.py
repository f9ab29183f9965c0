# %% [markdown]
# # The boundary system
#
# An adversary distributes density between small and large values of
# Re(e^{-i phi} a_v).  The three moment inequalities pin down the worst
# case as a root of a one-variable equation in d.

# %%
from fractions import Fraction as F

import numpy as np

from heckesectors import solve_boundary, threshold_scan
from heckesectors.density import boundary_parts, sensitivity_sweep

sol = solve_boundary(F(3, 4), F(25, 16), F(519, 128), F(1, 234))
print(sol)

# %% [markdown]
# A brute-force scan over d finds the same binding point.

# %%
scan = threshold_scan(F(3, 4), F(25, 16), F(519, 128), F(1, 234))
print("scan argmin d =", scan.argmin_d, " solver d =", sol.d, " agree:", scan.matches_solution)

# %%
ds = np.linspace(0.40, 0.60, 9)
parts = boundary_parts(ds, 0.75, 25 / 16, 519 / 128, 1 / 234)
for d, a, am in zip(ds, parts["alpha"], parts["alpha_max"]):
    print(f"d={d:.3f}  alpha={a:.4f}  alpha_max={am:.4f}")

# %% [markdown]
# Larger eighth moments push the threshold down.

# %%
print(sensitivity_sweep("q8", [3.9, 4.0, 519 / 128, 4.2]))
