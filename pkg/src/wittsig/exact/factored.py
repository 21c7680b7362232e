"""Unexpanded products of cyclotomic numbers.

The dimension formulas are long products of sines and square roots.  Their
Galois conjugates and signs can be read factor by factor (sigma is a ring
homomorphism), which keeps conductors small and avoids coefficient blow-up;
``expand()`` multiplies everything out when a single element is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .certify import DEFAULT_CAP_BITS, DEFAULT_START_BITS, Sign, certified_sign
from .cyclotomic import CyclotomicNumber, product
from .ntheory import lcm


@dataclass(frozen=True)
class CyclotomicProduct:
    """``scalar * prod(base ** exponent)`` with nonzero bases, exponents >= 1."""

    scalar: Fraction
    factors: tuple[tuple[CyclotomicNumber, int], ...] = ()

    def __post_init__(self):
        if self.scalar == 0:
            raise ValueError("scalar must be nonzero")
        for base, e in self.factors:
            if e < 1:
                raise ValueError(f"exponents must be positive, got {e}")
            if base.is_zero():
                raise ValueError("zero factor")

    @property
    def conductor(self) -> int:
        return lcm(*(b.conductor for b, _ in self.factors)) if self.factors else 1

    def galois(self, k: int) -> CyclotomicProduct:
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"sigma_{k} undefined: gcd({k}, {n}) = {gcd(k, n)}")
        return CyclotomicProduct(self.scalar, tuple((b.galois(k), e) for b, e in self.factors))

    def __mul__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        if not isinstance(other, CyclotomicProduct):
            return NotImplemented
        return CyclotomicProduct(self.scalar * other.scalar, self.factors + other.factors)

    def sign(self, cap_bits: int = DEFAULT_CAP_BITS, start_bits: int = DEFAULT_START_BITS) -> Sign:
        """Certified sign, requiring every factor to be real."""
        s = 1 if self.scalar > 0 else -1
        for base, e in self.factors:
            if e % 2:
                s *= int(certified_sign(base, start_bits=start_bits, cap_bits=cap_bits))
        return Sign(s)

    def expand(self) -> CyclotomicNumber:
        pieces = [base**e for base, e in self.factors]
        out = product(pieces) if pieces else CyclotomicNumber.from_rational(1)
        return (out * self.scalar).embed(self.conductor) if out.conductor != self.conductor else out * self.scalar
