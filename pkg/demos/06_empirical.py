# %% [markdown]
# # Truncated Dirichlet sums on synthetic data
#
# Finite data cannot confirm limits as s -> 1, but basic properties can be
# watched.  Eigenvalues on the rays k pi / r have a third moment that
# shrinks relative to log(1/(s-1)).

# %%
from heckesectors import compare_report, sector_density, synth_dataset, truncated_moment

ds = synth_dataset(seed=1, model="rays", count=10_000, r=5)
for s in (1.1, 1.01, 1.001):
    print(s, truncated_moment(ds, 3, 0.0, s).normalized)

# %%
print(compare_report(ds, r=5).to_table())

# %% [markdown]
# Sector occupancy for uniformly distributed arguments.  The weights p^-s
# favour the smallest primes heavily, so individual half-planes fluctuate.

# %%
import math

import numpy as np

uni = synth_dataset(seed=1, model="uniform-angle", count=10_000)
full = sector_density(uni, 0.0, math.pi, 0.0, 1.001)
for c in np.linspace(0, 2 * math.pi, 6, endpoint=False):
    print(f"centre {c:.2f}: {sector_density(uni, c, math.pi / 2, 0.0, 1.001) / full:.3f}")
