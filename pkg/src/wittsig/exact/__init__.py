"""Exact cyclotomic arithmetic, Galois actions, certified signs, number theory."""

from .certify import (
    DEFAULT_CAP_BITS,
    DEFAULT_START_BITS,
    PrecisionExhausted,
    Sign,
    certified_sign,
    compare,
    conjugate_signs,
    enclose,
    is_totally_positive,
)
from .cyclotomic import (
    CyclotomicNumber,
    GaloisElement,
    algebraic_norm,
    conjugates,
    cos_pi_frac,
    cyclo_arith,
    cyclotomic_poly,
    embed,
    galois_apply,
    imag_unit,
    inv_sin_pi_frac,
    product,
    quadratic_gauss_sum,
    rational,
    root_of_unity,
    sin_pi_frac,
    sqrt_int,
)
from .ntheory import bezout, crt_pair, crt_solve, euler_phi, factorize, is_prime, jacobi, lcm, units
from .factored import CyclotomicProduct

__all__ = [name for name in dir() if not name.startswith("_")]
