"""Twists, quantum dimensions and Gauss sums of C_r = so(2r)_{2r}, plus the
closed product formulas for sqrt(dim) in types D and B.

q = exp(pi i/(4r-2)) = zeta_{8r-4}.  Twist exponents (lambda|lambda+2rho) lie
in (1/4)Z, so twists live at conductor 16(2r-1); quantum dimensions are
products of sine ratios and live at conductor 8r-4.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exact import (
    CyclotomicNumber,
    CyclotomicProduct,
    Sign,
    certified_sign,
    inv_sin_pi_frac,
    lcm,
    product,
    sin_pi_frac,
    sqrt_int,
)
from .roots import (
    Weight,
    alcove_D,
    build_root_system,
    c_count,
    d_count,
    fundamental_weight,
    in_alcove_D,
    inner,
)


def q_modulus(r: int) -> int:
    """Order of q, 8r - 4."""
    return 8 * r - 4


def twist_conductor(r: int) -> int:
    return 16 * (2 * r - 1)


def q_param(r: int) -> CyclotomicNumber:
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    return CyclotomicNumber.zeta(q_modulus(r))


def _check_alcove(r: int, lam: Weight) -> None:
    if not in_alcove_D(lam, r):
        raise ValueError(f"weight {lam} is not in the level-{2 * r} alcove of D_{r}")


def twist_pairing(r: int, lam: Weight) -> Fraction:
    """(lambda | lambda + 2 rho)."""
    rho = build_root_system("D", r).rho
    return inner(lam, lam + 2 * rho)


def twist_exponent(r: int, lam: Weight) -> Fraction:
    """t in [0, 1) with theta_lambda = exp(2 pi i t)."""
    _check_alcove(r, lam)
    t = twist_pairing(r, lam) / (2 * (4 * r - 2))
    return t - (t.numerator // t.denominator)


def twist(r: int, lam: Weight) -> CyclotomicNumber:
    """theta_lambda = q^(lambda|lambda+2rho) at conductor 16(2r-1)."""
    t = twist_exponent(r, lam)
    m = twist_conductor(r)
    a = t * m
    if a.denominator != 1:
        raise AssertionError(f"twist exponent {t} not in (1/{m})Z")
    return CyclotomicNumber.zeta(m, int(a))


def twist_order(r: int, lam: Weight) -> int:
    return twist_exponent(r, lam).denominator


@lru_cache(maxsize=None)
def _sin(j: int, m: int) -> CyclotomicNumber:
    return sin_pi_frac(j, m)


@lru_cache(maxsize=None)
def _inv_sin(j: int, m: int) -> CyclotomicNumber:
    return inv_sin_pi_frac(j, m)


def qdim_heights(r: int, lam: Weight) -> tuple[Counter, Counter]:
    """Multisets of (lambda+rho|alpha) and (rho|alpha) after cancelling common values."""
    rs = build_root_system("D", r)
    top = Counter(int(inner(lam + rs.rho, a)) for a in rs.positive_roots)
    bottom = Counter(int(inner(rs.rho, a)) for a in rs.positive_roots)
    common = top & bottom
    return top - common, bottom - common


def qdim(r: int, lam: Weight) -> CyclotomicNumber:
    """Quantum Weyl dimension prod_alpha [(lambda+rho|alpha)]_q / [(rho|alpha)]_q.

    With q = exp(pi i/m), m = 4r-2, each ratio of q-integers is a ratio of
    sines sin(a pi/m)/sin(b pi/m).
    """
    _check_alcove(r, lam)
    m = 4 * r - 2
    top, bottom = qdim_heights(r, lam)
    pieces = [_sin(a, m) ** e for a, e in sorted(top.items())]
    pieces += [_inv_sin(b, m) ** e for b, e in sorted(bottom.items())]
    out = product(pieces) if pieces else CyclotomicNumber.from_rational(1)
    n = lcm(2 * m, 4)
    return out if out.conductor == n else out.embed(n)


# ---------------------------------------------------------------------------
# category-level data


@dataclass(frozen=True)
class CategoryData:
    rank: int
    q: CyclotomicNumber
    alcove: tuple[Weight, ...]
    twist_exponents: tuple[Fraction, ...]
    twists: tuple[CyclotomicNumber, ...]
    qdims: tuple[CyclotomicNumber, ...]
    t_order: int
    dim_total: CyclotomicNumber

    def index(self, lam: Weight) -> int:
        return self.alcove.index(lam)

    def to_json(self, digits: int = 15) -> str:
        m = twist_conductor(self.rank)
        objects = []
        for lam, t, d in zip(self.alcove, self.twist_exponents, self.qdims):
            objects.append(
                {
                    "coords2": list(lam.coords2),
                    "twist_numerator": int(t * m),
                    "twist_denominator": m,
                    "qdim": decimal_str(d, digits),
                }
            )
        return json.dumps(
            {
                "schema_version": 1,
                "rank": self.rank,
                "t_order": self.t_order,
                "dim": decimal_str(self.dim_total, 50),
                "objects": objects,
            },
            indent=None,
        )


def decimal_str(x: CyclotomicNumber, digits: int) -> str:
    from mpmath import nstr

    return nstr(x.to_complex(digits + 5).real, digits)


@lru_cache(maxsize=8)
def category_data(r: int, threads: int = 1) -> CategoryData:
    """Twists and quantum dimensions for every simple object of C_r."""
    objs = tuple(alcove_D(r))
    tw_exp = tuple(twist_exponent(r, lam) for lam in objs)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            qdims = tuple(pool.map(lambda lam: qdim(r, lam), objs))
    else:
        qdims = tuple(qdim(r, lam) for lam in objs)
    m = twist_conductor(r)
    twists = tuple(CyclotomicNumber.zeta(m, int(t * m)) for t in tw_exp)
    order = lcm(*(t.denominator for t in tw_exp))
    dim_total = _sum_squares(qdims)
    return CategoryData(r, q_param(r), objs, tw_exp, twists, qdims, order, dim_total)


def _sum_squares(values) -> CyclotomicNumber:
    total = CyclotomicNumber.from_rational(0, values[0].conductor)
    for d in values:
        total = total + d * d
    return total


def t_order(r: int) -> int:
    """N_r: the lcm of the multiplicative orders of all twists."""
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    return lcm(*(twist_order(r, lam) for lam in alcove_D(r)))


def global_dim(r: int) -> CyclotomicNumber:
    return category_data(r).dim_total


def gauss_sum(r: int, n: int) -> CyclotomicNumber:
    """tau_n(C_r) = sum_lambda d_lambda^2 theta_lambda^n, at conductor 16(2r-1)."""
    data = category_data(r)
    m = twist_conductor(r)
    buckets: dict[int, CyclotomicNumber] = {}
    for t, d in zip(data.twist_exponents, data.qdims):
        e = int(t * m) * n % m
        sq = d * d
        buckets[e] = buckets[e] + sq if e in buckets else sq
    total = CyclotomicNumber.from_rational(0, m)
    for e in sorted(buckets):
        total = total + buckets[e].embed(m) * CyclotomicNumber.zeta(m, e)
    return total


def sqrt_global_dim(r: int) -> CyclotomicNumber:
    """sqrt(dim C_r) = sqrt(8) D_r (r odd) or 4 D_r (r even), from the product formula."""
    d = sqrt_dim_formula_D(r)
    return d * sqrt_int(8) if r % 2 else d * 4


def central_charge(r: int, n: int = 1) -> CyclotomicNumber:
    """xi_n(C_r) = tau_n/|tau_n|.

    For n = 1 this is tau_1/sqrt(dim) with the positive square root from the
    product formula.  For other n the unique root of unity u with tau_n/u > 0
    is located exactly (realness tested in canonical form, positivity
    certified).
    """
    tau = gauss_sum(r, n)
    if tau.is_zero():
        raise ZeroDivisionError(f"tau_{n}(C_{r}) vanishes; central charge undefined")
    if n == 1:
        return (tau / sqrt_global_dim(r)).minimize_conductor()
    return unit_phase(tau)


def unit_phase(x: CyclotomicNumber) -> CyclotomicNumber:
    """The root of unity u with x/u real and positive, if x/|x| is one."""
    m = lcm(2, x.conductor)
    for a in range(m):
        cand = x * CyclotomicNumber.zeta(m, -a)
        if cand.is_real() and certified_sign(cand) == Sign.POSITIVE:
            return CyclotomicNumber.zeta(m, a).minimize_conductor()
    raise ValueError("phase of x is not a root of unity in its field")


def expected_central_charge(r: int) -> CyclotomicNumber:
    """exp(pi i r^2/4) = zeta_8^(r^2)."""
    return CyclotomicNumber.zeta(8, r * r)


# ---------------------------------------------------------------------------
# product formulas


def _pow2(e: Fraction) -> Fraction:
    if e.denominator != 1:
        raise AssertionError(f"non-integral power of two: {e}")
    return Fraction(2) ** int(e)


def dim_formula_scalar_D(r: int) -> Fraction:
    """Rational prefactor of D_r.

    r odd: 2^((-2r^2+3r-1)/2) (2r-1)^((r-1)/2); r even: 2^((-2r^2+3r-2)/2) (2r-1)^(r/2).
    These come from |P/(4r-2)Q| = 4(4r-2)^r and |Delta_+| = r(r-1), divided
    by sqrt(8) or 4.
    """
    if r % 2:
        return _pow2(Fraction(-2 * r * r + 3 * r - 1, 2)) * Fraction(2 * r - 1) ** ((r - 1) // 2)
    return _pow2(Fraction(-2 * r * r + 3 * r - 2, 2)) * Fraction(2 * r - 1) ** (r // 2)


def doubled_scalar_D(r: int) -> Fraction:
    """Prefactor with 2-exponents (-2r^2+3r+1)/2 (odd r) and (3-2r)r/2 (even r).

    Exactly twice ``dim_formula_scalar_D``; with it the dimension identity fails by 4.
    """
    if r % 2:
        return _pow2(Fraction(-2 * r * r + 3 * r + 1, 2)) * Fraction(2 * r - 1) ** ((r - 1) // 2)
    return _pow2(Fraction((3 - 2 * r) * r, 2)) * Fraction(2 * r - 1) ** (r // 2)


def sqrt_dim_product_D(r: int) -> CyclotomicProduct:
    """D_r = sqrt(dim D_r) as an unexpanded product at conductor 8r-4.

    r odd: c sqrt(2r-1) / prod_j sin(j pi/(4r-2))^d_r(j); r even: c / prod(...),
    with c = dim_formula_scalar_D(r).
    """
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    m = 4 * r - 2
    factors = []
    if r % 2:
        factors.append((sqrt_int(2 * r - 1), 1))
    for j in range(1, 2 * r - 2):
        e = d_count(r, j)
        if e:
            factors.append((_inv_sin(j, m), e))
    return CyclotomicProduct(dim_formula_scalar_D(r), tuple(factors))


@lru_cache(maxsize=None)
def sqrt_dim_formula_D(r: int) -> CyclotomicNumber:
    """D_r expanded into a single cyclotomic number."""
    return sqrt_dim_product_D(r).expand()


def dim_formula_scalar_B(b: int) -> Fraction:
    """W sqrt(b) with its rational part: b^floor(b/2) / 2^(b^2-b-1)."""
    return Fraction(b ** (b // 2), 2 ** (b * b - b - 1))


def sqrt_dim_product_B(b: int) -> CyclotomicProduct:
    """B_b = sqrt(dim so(2b+1)_{2b+1}) as an unexpanded product at conductor 16b.

    W sqrt(b) / (prod_{l=1}^b sin((2l-1)pi/8b) * prod_{j=1}^{2b-2} sin(j pi/4b)^c_b(j)).
    """
    if b < 2:
        raise ValueError(f"rank must be at least 2, got {b}")
    factors = []
    if b % 2:
        factors.append((sqrt_int(b), 1))
    for l in range(1, b + 1):
        factors.append((_inv_sin(2 * l - 1, 8 * b), 1))
    for j in range(1, 2 * b - 1):
        e = c_count(b, j)
        if e:
            factors.append((_inv_sin(j, 4 * b), e))
    return CyclotomicProduct(dim_formula_scalar_B(b), tuple(factors))


@lru_cache(maxsize=None)
def sqrt_dim_formula_B(b: int) -> CyclotomicNumber:
    x = sqrt_dim_product_B(b).expand()
    return x if x.conductor == 16 * b else x.embed(16 * b)


def dim_local(r: int) -> CyclotomicNumber:
    """dim(D_r) = dim(C_r)/8 for odd r, /16 for even r."""
    return global_dim(r) * Fraction(1, 8 if r % 2 else 16)


# ---------------------------------------------------------------------------
# invertible objects


@dataclass(frozen=True)
class InvertibleObject:
    name: str
    weight: Weight
    twist: CyclotomicNumber
    expected: CyclotomicNumber
    qdim: CyclotomicNumber

    @property
    def matches(self) -> bool:
        return self.twist == self.expected


def invertible_data(r: int) -> tuple[InvertibleObject, ...]:
    """lambda_1 = 2r w_{r-1}, lambda_2 = 2r w_1, lambda_3 = 2r w_r with twists.

    Expected values exp(r^2 pi i/2), 1, exp(r^2 pi i/2).
    """
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    quarter = CyclotomicNumber.zeta(4, r * r)
    one = CyclotomicNumber.from_rational(1)
    weights = (
        ("lambda_1", (2 * r) * fundamental_weight(r, r - 1), quarter),
        ("lambda_2", (2 * r) * fundamental_weight(r, 1), one),
        ("lambda_3", (2 * r) * fundamental_weight(r, r), quarter),
    )
    return tuple(
        InvertibleObject(name, w, twist(r, w), exp, qdim(r, w)) for name, w, exp in weights
    )


def lambda1_pairings(r: int) -> tuple[Fraction, Fraction]:
    """(lambda|lambda+2rho) for lambda = 2r w_{r-1} and for 4r w_{r-1} - 2r w_r.

    The twist exp(r^2 pi i/2) needs 2r^3 - r^2; only the first weight gives it.
    """
    rho = build_root_system("D", r).rho
    lit = (2 * r) * fundamental_weight(r, r - 1)
    alt = (4 * r) * fundamental_weight(r, r - 1) - (2 * r) * fundamental_weight(r, r)
    return inner(lit, lit + 2 * rho), inner(alt, alt + 2 * rho)


def positive_sqrt_check(x: CyclotomicNumber, square: CyclotomicNumber) -> bool:
    """x^2 == square exactly and x certified positive."""
    return x * x == square and certified_sign(x) == Sign.POSITIVE


def field_contains(x: CyclotomicNumber, n: int) -> bool:
    """Whether x lies in Q(zeta_n)."""
    try:
        x.restrict(n)
    except ValueError:
        return False
    return True


def gcd_ok(k: int, n: int) -> bool:
    return gcd(k, n) == 1
