# %% [markdown]
# # Leading constants of the moments
#
# Summing the pole orders with binomial weights turns each moment of
# Re(e^{i phi} a_v) into an exact cosine polynomial in phi.

# %%
from heckesectors import moment_bounds, moment_poly
from heckesectors.moments import q8_uniform

for r in (2, 3, 4, 7):
    print(f"r={r}: q4 = {moment_poly(4, r)},  q6 <= {moment_poly(6, r)}")

# %%
for r in (2, 3, 4, 5, 10, 15, 20, 7):
    mb = moment_bounds(r)
    print(f"r={r:<3} q6_upper={str(mb.q6_upper):<6} 2^8 q8={int(mb.q8_upper * 256)}")

# %% [markdown]
# A single eighth-moment constant serves all r >= 6: the largest one.

# %%
print("uniform q8 for r >= 6:", q8_uniform(6), "=", float(q8_uniform(6)))
