"""Elementary number theory: Jacobi symbols, Bezout, CRT, primality."""

from __future__ import annotations

from functools import lru_cache
from math import gcd


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd positive m.

    Returns 0 when gcd(a, m) > 1, so callers that need a unit must check.
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` and ``g >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def crt_pair(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine congruences ``x = r_i (mod m_i)`` into ``(x, lcm)``, 0 <= x < lcm.

    Moduli need not be coprime; incompatible systems raise ValueError.
    """
    x, modulus = 0, 1
    for r, m in residues:
        if m <= 0:
            raise ValueError(f"moduli must be positive, got {m}")
        g, p, _ = bezout(modulus, m)
        if (r - x) % g:
            raise ValueError(f"incompatible congruences: {x} mod {modulus} vs {r} mod {m}")
        lcm = modulus // g * m
        x = (x + modulus * ((r - x) // g * p % (m // g))) % lcm
        modulus = lcm
    return x, modulus


def crt_solve(residues: list[tuple[int, int]]) -> int:
    """Smallest non-negative solution of the congruence system."""
    return crt_pair(residues)[0]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24 (covers 64-bit)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization ``((p, e), ...)``; conductors here are small."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def units(n: int) -> list[int]:
    """Residues 1 <= k <= n coprime to n (k = 1 for n = 1)."""
    if n == 1:
        return [1]
    return [k for k in range(1, n) if gcd(k, n) == 1]


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out // gcd(out, v) * v
    return out
