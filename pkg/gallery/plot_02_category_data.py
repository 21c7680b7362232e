"""
Twists and quantum dimensions of so(2r) at level 2r
===================================================

Simple objects are labelled by the level-2r alcove. Each carries a twist
(a root of unity) and a quantum dimension (a totally real cyclotomic number).
"""

# %%
from wittsig.invariants import category_data, central_charge, dim_local, sqrt_dim_formula_D, t_order
from wittsig.roots import alcove_D

for r in (2, 3, 4):
    print(f"r = {r}: {len(alcove_D(r))} simple objects, T-order {t_order(r)}")

# %%
# The global dimension is the sum of the squared quantum dimensions. It agrees
# exactly with a closed product of sines (times 8 or 16).
r = 4
data = category_data(r)
d = sqrt_dim_formula_D(r)
print("sum d^2 == 16 D^2:", data.dim_total == 16 * d * d)
print("dim D_4 ~", dim_local(4).to_complex(20).real)

# %%
# The central charge tau_1 / sqrt(dim) is exp(pi i r^2 / 4).
for r in (2, 3, 4, 5):
    print(r, central_charge(r).to_complex(15))

# %%
# Objects with trivial twist in C_4.
tw = [(lam.coords, dq.to_complex(12).real) for lam, t, dq in zip(data.alcove, data.twist_exponents, data.qdims) if t == 0]
for coords, dim in tw:
    print([str(c) for c in coords], round(float(dim), 6))
