"""Certified signs of real cyclotomic numbers by interval evaluation."""

from __future__ import annotations

import logging
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache

from mpmath.ctx_iv import MPIntervalContext

from .cyclotomic import CyclotomicNumber, conjugates
from .ntheory import units

log = logging.getLogger(__name__)

DEFAULT_START_BITS = 128
DEFAULT_CAP_BITS = 16384


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class PrecisionExhausted(ArithmeticError):
    """Interval evaluation could not separate the value from zero below the cap."""


@lru_cache(maxsize=256)
def _cos_table(n: int, bits: int):
    """Interval enclosures of cos(2 pi i/n), i < n, in a private context at ``bits``."""
    ctx = MPIntervalContext()
    ctx.prec = bits
    step = 2 * ctx.pi / n
    return ctx, tuple(ctx.cos(step * i) for i in range(n))


def _interval_real_part(x: CyclotomicNumber, bits: int):
    ctx, table = _cos_table(x.conductor, bits)
    total = ctx.mpf(0)
    for i, c in enumerate(x.numerators):
        if c:
            total += c * table[i]
    return total / x.denominator


def enclose(x: CyclotomicNumber, bits: int = DEFAULT_START_BITS) -> tuple[Fraction, Fraction]:
    """Rigorous rational bounds ``(lo, hi)`` on the real part of x."""
    lo, hi = _interval_real_part(x, bits)._mpi_
    return _mpf_fraction(lo), _mpf_fraction(hi)


def _mpf_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    f = Fraction(int(man)) * (Fraction(2) ** exp)
    return -f if sign else f


def certified_sign(
    x: CyclotomicNumber,
    start_bits: int = DEFAULT_START_BITS,
    cap_bits: int = DEFAULT_CAP_BITS,
) -> Sign:
    """Sign of a real cyclotomic number under zeta_n = exp(2 pi i/n).

    Exact zero is read off the canonical form.  Otherwise the value is
    enclosed at increasing precision (doubling from ``start_bits``) until the
    interval excludes zero; ``PrecisionExhausted`` past ``cap_bits``.
    """
    if start_bits < 2 or cap_bits < start_bits:
        raise ValueError(f"bad precision schedule {start_bits}..{cap_bits}")
    if x.is_zero():
        return Sign.ZERO
    if x.is_rational():
        return Sign.POSITIVE if x.to_rational() > 0 else Sign.NEGATIVE
    if not x.is_real():
        raise ValueError("certified_sign needs a real number (x != conj(x))")
    bits = start_bits
    while True:
        lo, hi = _interval_real_part(x, bits)._mpi_
        if lo[1] and not lo[0]:  # lower endpoint strictly positive
            return Sign.POSITIVE
        if hi[1] and hi[0]:  # upper endpoint strictly negative
            return Sign.NEGATIVE
        if bits >= cap_bits:
            raise PrecisionExhausted(f"sign undecided at {bits} bits")
        log.debug("sign undecided at %d bits, doubling", bits)
        bits = min(2 * bits, cap_bits)


def is_totally_positive(x: CyclotomicNumber, cap_bits: int = DEFAULT_CAP_BITS) -> bool:
    """True iff every Galois conjugate of the real number x is positive."""
    if not x.is_real():
        raise ValueError("total positivity needs a real number")
    return all(certified_sign(y, cap_bits=cap_bits) == Sign.POSITIVE for y in conjugates(x))


def conjugate_signs(x: CyclotomicNumber, cap_bits: int = DEFAULT_CAP_BITS) -> dict[int, Sign]:
    """Map each unit k mod n to sign(sigma_k(x))."""
    return {k: certified_sign(x.galois(k), cap_bits=cap_bits) for k in units(x.conductor)}


def compare(a: CyclotomicNumber, b: CyclotomicNumber | int | Fraction, **kw) -> Sign:
    """Certified sign of a - b."""
    return certified_sign(a - b, **kw)
