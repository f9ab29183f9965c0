# %% [markdown]
# # Tensor powers of the standard representation
#
# A character of GL(2) is a Laurent polynomial in the Satake parameters
# alpha and beta.  Products of the standard representation and its dual
# break up into twisted symmetric powers, and the multiplicities follow a
# ballot-number pattern.

# %%
from heckesectors import VirtualCharacter, decompose_to_symdet, tensor_power
from heckesectors.repring import ballot_multiplicity, format_symdet

std = VirtualCharacter.standard()
print("std x std =", (std * std).coeffs)

# %% [markdown]
# The mixed cubic pi x pi x conj(pi) splits into a twisted cube and two
# copies of pi.

# %%
for mn in [(2, 1), (4, 0), (3, 1), (4, 4)]:
    dec = tensor_power(*mn)
    print(mn, ", ".join(f"{format_symdet(c)}: {v}" for c, v in dec.items()))

# %% [markdown]
# Multiplicities depend only on k = m + n and on how far down the Sym ladder
# one goes.

# %%
for k in range(1, 9):
    print(k, [ballot_multiplicity(k, t) for t in range(k // 2 + 1)])

# %%
x = std**6 * VirtualCharacter.det(-3)
print(decompose_to_symdet(x))
