"""
Witt signatures of the D and B families
=======================================

The signature of sigma_k is the sign of sigma_k applied to the positive
square root of the global dimension.
"""

# %%
from wittsig.signature import (
    check_periodicity_D,
    profile_D,
    signature,
    verify_BD_separation,
    verify_independence_D_odd,
)

for fam, rank, k in [("D", 5, 5), ("D", 13, 13), ("D", 4, 9), ("D", 6, 5), ("B", 23, 9), ("B", 23, 193)]:
    print(f"eps_{fam}{rank}(sigma_{k}) = {int(signature(fam, rank, k)):+d}")

# %%
# For type D the signature only depends on k modulo 4r - 2.
print(profile_D(5).signs)
print(check_periodicity_D(5, window=200).status)

# %%
# A Galois element built by the Chinese remainder theorem flips exactly one
# coordinate of a signature vector.
rep = verify_independence_D_odd([41, 73], pin=0)
print(rep.parameters, rep.computed)

# %%
# D_12 and B_23 are separated by one Galois element and its shift by 8b.
print(verify_BD_separation(12).computed)
