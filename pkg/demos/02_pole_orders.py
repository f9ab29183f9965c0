# %% [markdown]
# # Which tensor powers have a pole at s = 1?
#
# Each L-function L(s, pi^m x conj(pi)^n) factors into twists of symmetric
# power L-functions and Rankin-Selberg products.  Only a few of those factors
# can have a pole, and whether they do depends on the order r of the central
# character.

# %%
from heckesectors.poles import Hypotheses, a_table, moment_pole_order
from heckesectors.poles import a_table_label, k6_factorization_sym3, k6_factorization_sym4

print(k6_factorization_sym3(3))
print(k6_factorization_sym4(3))

# %% [markdown]
# For the sixth power the two factorizations are checked against each other;
# the pole order is either 0 or 5.

# %%
for r in (2, 3, 4, 7):
    h = Hypotheses(r)
    print(r, [moment_pole_order(6, n, h).lo for n in range(7)])

# %% [markdown]
# For the eighth power one factor, Sym^4 x Sym^4, cannot always be decided.
# Those entries are intervals.

# %%
print("r   " + " ".join(f"n={n:<3}" for n in range(9)))
for r in (2, 3, 4, 5, 7, 10, 15, 20, 23):
    print(f"{r:<3} " + " ".join(f"{a_table_label(a_table(n, r)):<5}" for n in range(9)))
