"""
Exact cyclotomic numbers and certified signs
============================================

Elements of Q(zeta_n) are stored exactly. Galois conjugation is an exponent
substitution, and the sign of a real element is certified with interval
arithmetic.
"""

# %%
# A square root as a Gauss sum: sqrt(5) lives in Q(zeta_5).
from wittsig.exact import CyclotomicNumber, certified_sign, conjugates, sqrt_int

r5 = sqrt_int(5)
print("sqrt(5) =", r5)
print("squared:", r5 * r5)

# %%
# sigma_2 sends zeta_5 to zeta_5^2 and sqrt(5) to -sqrt(5).
for k in (1, 2, 3, 4):
    print(k, certified_sign(r5.galois(k)))

# %%
# Numbers that are very close to zero need more bits; the precision doubles
# until the enclosing interval excludes zero.
from fractions import Fraction

tiny = sqrt_int(2) - Fraction(665857, 470832)
print("sign of sqrt(2) - 665857/470832:", certified_sign(tiny))

# %%
# Conjugates of 2 cos(2 pi/7).
z = CyclotomicNumber.zeta(7)
c = z + z.conj()
for x in conjugates(c):
    print(x.to_complex(20).real)
