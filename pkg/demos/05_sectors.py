# %% [markdown]
# # From a threshold to a sector
#
# A positive-density set of places has Re(e^{-i phi} a_v) above the
# threshold, while |a_v| <= Q outside a set of density at most the cap.
# Those two facts put a_v in a sector of half-angle arccos(threshold / Q).

# %%
import math

from heckesectors import min_Q_for_cap, sector_half_angle, theorem_pipeline
from heckesectors.density import argument_lines, ks_bound, min_guaranteed_sector

print("Q for cap 1/234:", min_Q_for_cap(1 / 234), " ks_bound(2.341) =", ks_bound(2.341))
res = theorem_pipeline(11)
print(f"threshold {res.threshold:.5f}, Q {res.Q}, half-angle {res.half_angle:.5f} rad "
      f"= {math.degrees(res.half_angle):.3f} deg")

# %%
print(sector_half_angle(0.59566, 2.341))

# %% [markdown]
# Small central character orders force a_v onto finitely many rays, and a
# sector then only needs to contain r - 1 consecutive rays.

# %%
for r in (2, 3, 4, 5):
    rays = argument_lines(r)
    print(r, f"spacing {math.degrees(rays.spacing):.0f} deg,",
          f"guaranteed sector {min_guaranteed_sector(r):.5f} rad")

# %%
for b in theorem_pipeline(2).branches:
    print(b)
