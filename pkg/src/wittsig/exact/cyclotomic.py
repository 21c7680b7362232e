"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis ``1, z, ..., z^(phi(n)-1)`` of
``Q[x]/Phi_n(x)`` with ``z = exp(2 pi i / n)``.  Coefficients are kept as
integer numerators over one positive common denominator, reduced so the
representation is canonical: an element is zero iff every numerator is zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .ntheory import euler_phi, factorize, jacobi, lcm, units

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction


def _mobius(n: int) -> int:
    out = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        out = -out
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    # Phi_n = prod_{d | n} (x^d - 1)^mu(n/d); multiply first, then divide.
    poly = [1]
    divide_by = []
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            new = [0] * (len(poly) + d)
            for i, c in enumerate(poly):
                new[i + d] += c
                new[i] -= c
            poly = new
        elif mu == -1:
            divide_by.append(d)
    for d in divide_by:
        # exact division by x^d - 1: q[i] = -(p[i] - q[i-d])
        deg = len(poly) - 1 - d
        q = [0] * (deg + 1)
        for i in range(deg + 1):
            q[i] = -poly[i] + (q[i - d] if i >= d else 0)
        poly = q
    if poly[-1] != 1:
        raise AssertionError(f"Phi_{n} not monic: {poly}")
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_data(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """(phi, sparse lower terms of Phi_n) used by long division."""
    poly = cyclotomic_poly(n)
    deg = len(poly) - 1
    return deg, tuple((j, c) for j, c in enumerate(poly[:-1]) if c)


def _reduce(vec: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient list modulo x^n - 1 and then Phi_n."""
    phi, terms = _reduction_data(n)
    if len(vec) > n:
        folded = [0] * n
        for i, c in enumerate(vec):
            if c:
                folded[i % n] += c
        vec = folded
    else:
        vec = list(vec)
    for top in range(len(vec) - 1, phi - 1, -1):
        c = vec[top]
        if c:
            base = top - phi
            for j, pj in terms:
                vec[base + j] -= c * pj
    if len(vec) < phi:
        vec.extend([0] * (phi - len(vec)))
    return vec[:phi]


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    nz_b = [(j, cb) for j, cb in enumerate(b) if cb]
    for i, ca in enumerate(a):
        if ca:
            for j, cb in nz_b:
                out[i + j] += ca * cb
    return out


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# the element type


class CyclotomicNumber:
    """An element of Q(zeta_n) in canonical power-basis form.

    Instances are immutable and hashable.  Arithmetic between different
    conductors embeds both operands into the lcm conductor; the result is not
    shrunk afterwards (see :meth:`minimize_conductor`).
    """

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Scalar]):
        coeffs = [_as_fraction(c) for c in coeffs]
        n = int(conductor)
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        num = [c.numerator * (den // c.denominator) for c in coeffs]
        if len(num) != euler_phi(n):
            num = _reduce(num, n)
        self._set(n, num, den)

    def _set(self, n: int, num: list[int], den: int) -> None:
        self._n = n
        self._num, self._den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, n: int, num: list[int], den: int = 1) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        obj._set(n, num, den)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, value: Scalar, conductor: int = 1) -> CyclotomicNumber:
        value = _as_fraction(value)
        num = [0] * euler_phi(conductor)
        num[0] = value.numerator
        return cls._raw(conductor, num, value.denominator)

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> CyclotomicNumber:
        """zeta_n ** power, stored at conductor n."""
        vec = [0] * n
        vec[power % n] = 1
        return cls._raw(n, _reduce(vec, n))

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, Scalar]) -> CyclotomicNumber:
        """Sum of ``c * zeta_n**e`` for ``e, c`` in ``terms``."""
        den = lcm(*(_as_fraction(c).denominator for c in terms.values())) if terms else 1
        vec = [0] * n
        for e, c in terms.items():
            c = _as_fraction(c)
            vec[e % n] += c.numerator * (den // c.denominator)
        return cls._raw(n, _reduce(vec, n), den)

    # -- accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._num[0], self._den)

    # -- embedding ----------------------------------------------------------

    def embed(self, m: int) -> CyclotomicNumber:
        """Same number represented at conductor ``m`` (``n`` must divide ``m``)."""
        n = self._n
        if m % n:
            raise ValueError(f"cannot embed conductor {n} into {m}: {n} does not divide {m}")
        if m == n:
            return self
        step = m // n
        vec = [0] * m
        for i, c in enumerate(self._num):
            vec[i * step] = c
        return CyclotomicNumber._raw(m, _reduce(vec, m), self._den)

    def _coerce(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, self._n)
        elif not isinstance(other, CyclotomicNumber):
            raise TypeError(f"cannot combine CyclotomicNumber with {type(other).__name__}")
        if other._n == self._n:
            return self, other
        m = lcm(self._n, other._n)
        return self.embed(m), other.embed(m)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        den = a._den * b._den // gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        num = [x * fa + y * fb for x, y in zip(a._num, b._num)]
        return CyclotomicNumber._raw(a._n, num, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._n, [-c for c in self._num], self._den)

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            return CyclotomicNumber._raw(
                self._n, [c * other.numerator for c in self._num], self._den * other.denominator
            )
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        num = _reduce(_convolve(a._num, b._num), a._n)
        return CyclotomicNumber._raw(a._n, num, a._den * b._den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.from_rational(1, self._n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        n = self._n
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.to_rational(), n)
        s = _poly_inverse_mod(list(self._num), list(cyclotomic_poly(n)))
        den = lcm(*(c.denominator for c in s))
        num = [c.numerator * (den // c.denominator) for c in s]
        num += [0] * (euler_phi(n) - len(num))
        # x = num/self._den, so 1/x = self._den * s
        return CyclotomicNumber._raw(n, [c * self._den for c in num], den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return self * (1 / other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic number")
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.from_rational(_as_fraction(other), self._n) / self

    # -- Galois action ------------------------------------------------------

    def galois(self, k: int) -> CyclotomicNumber:
        """sigma_k: zeta_n -> zeta_n^k, for k coprime to the conductor."""
        n = self._n
        if gcd(k, n) != 1:
            raise ValueError(f"sigma_{k} undefined on Q(zeta_{n}): gcd({k}, {n}) = {gcd(k, n)}")
        k %= n
        if k == 1 % n:
            return self
        vec = [0] * n
        for i, c in enumerate(self._num):
            if c:
                vec[i * k % n] += c
        return CyclotomicNumber._raw(n, _reduce(vec, n), self._den)

    def conj(self) -> CyclotomicNumber:
        """Complex conjugation, i.e. sigma_{n-1}."""
        return self.galois(self._n - 1)

    def is_real(self) -> bool:
        return self == self.conj()

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rational() == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other._n == self._n:
            return self._den == other._den and self._num == other._num
        a, b = self._coerce(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        # equal numbers at different conductors must hash alike: hash the
        # minimal-conductor form lazily.
        if self._hash is None:
            m = self.minimize_conductor()
            self._hash = hash((m._n, m._num, m._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- conductor minimization --------------------------------------------

    def minimize_conductor(self) -> CyclotomicNumber:
        """Represent the same number at the smallest conductor containing it."""
        x = self
        changed = True
        while changed and x._n > 1:
            changed = False
            n = x._n
            if n % 4 == 2:
                x = x._descend(n // 2)
                changed = True
                continue
            for p, _ in factorize(n):
                d = n // p
                if all(x.galois(k) == x for k in units(n) if k % d == 1 % d):
                    y = x._try_descend(d)
                    if y is not None:
                        x = y
                        changed = True
                        break
        return x

    def _try_descend(self, d: int) -> CyclotomicNumber | None:
        basis = [CyclotomicNumber.zeta(d, j).embed(self._n) for j in range(euler_phi(d))]
        sol = _solve_rational([b._num for b in basis], self._num)
        if sol is None:
            return None
        cand = CyclotomicNumber(d, [c / self._den for c in sol])
        return cand if cand.embed(self._n) == self else None

    def _descend(self, d: int) -> CyclotomicNumber:
        y = self._try_descend(d)
        if y is None:
            raise ValueError(f"element does not lie in Q(zeta_{d})")
        return y

    def restrict(self, d: int) -> CyclotomicNumber:
        """Express the number at conductor ``d``; raises if it is not in Q(zeta_d)."""
        if d % self._n == 0:
            return self.embed(d)
        m = lcm(d, self._n)
        return self.embed(m)._descend(d) if m != d else self.embed(d)

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicNumber(n={self._n}: {body})"

    def to_complex(self, dps: int = 30):
        """Floating approximation under zeta_n = exp(2 pi i/n); presentation only."""
        import mpmath

        ctx = mpmath.MPContext()
        ctx.dps = dps + 10
        n = self._n
        total = ctx.mpc(0)
        for i, c in enumerate(self._num):
            if c:
                total += ctx.mpf(c) * ctx.expjpi(ctx.mpf(2 * i) / n)
        total /= self._den
        ctx.dps = dps
        return +total


# ---------------------------------------------------------------------------
# linear algebra helpers over Q


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] / lead
        q[shift] = c
        if c:
            for j, bj in enumerate(b):
                a[shift + j] -= c * bj
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_inverse_mod(p: Sequence[int], modulus: Sequence[int]) -> list[Fraction]:
    """s with s*p = 1 mod modulus, for p coprime to modulus."""
    r0 = _poly_trim([Fraction(c) for c in modulus])
    r1 = _poly_trim([Fraction(c) for c in p])
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    # invariant: r_i = s_i * p  (mod modulus)
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        if not r:
            raise ZeroDivisionError("element is not invertible")
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    c = r1[0]
    s = [x / c for x in s1]
    if len(s) >= len(r0) and len(s) >= len(modulus):
        _, s = _poly_divmod(s, [Fraction(c) for c in modulus])
    return s


def _solve_rational(columns: list[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Solve sum_j y_j * columns[j] = rhs exactly; None if inconsistent."""
    rows = len(rhs)
    ncol = len(columns)
    mat = [[Fraction(columns[j][i]) for j in range(ncol)] + [Fraction(rhs[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncol):
        pivot = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    if any(mat[i][ncol] != 0 for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][ncol]
    return sol


# ---------------------------------------------------------------------------
# named constructors


def root_of_unity(n: int, power: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(n, power)


def rational(value: Scalar, conductor: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.from_rational(value, conductor)


def imag_unit() -> CyclotomicNumber:
    return CyclotomicNumber.zeta(4, 1)


def sin_pi_frac(j: int, m: int) -> CyclotomicNumber:
    """Exact sin(j*pi/m) at conductor lcm(2m, 4)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n = lcm(2 * m, 4)
    s = n // (2 * m)  # zeta_{2m} = zeta_n^s
    quarter = n // 4  # i = zeta_n^(n/4)
    # (z^j - z^-j) / (2i) = (-i/2)(z^j - z^-j)
    terms: dict[int, Fraction] = {}
    for e, c in ((quarter + s * j, Fraction(-1, 2)), (quarter - s * j, Fraction(1, 2))):
        terms[e % n] = terms.get(e % n, Fraction(0)) + c
    return CyclotomicNumber.from_exponents(n, terms)


def inv_sin_pi_frac(j: int, m: int) -> CyclotomicNumber:
    """Exact 1/sin(j*pi/m) without a general field inversion.

    Uses 1/(w - 1) = (1/d) * sum_{t=1}^{d-1} t w^t for w a root of unity of
    order d > 1, with sin = (w - 1) / (2i z^j), w = z^(2j), z = zeta_{2m}.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if j % m == 0:
        raise ZeroDivisionError(f"sin({j}*pi/{m}) = 0")
    n = lcm(2 * m, 4)
    s = n // (2 * m)
    quarter = n // 4
    w_exp = 2 * s * j % n
    d = n // gcd(w_exp, n)
    # 2i z^j / (w - 1)
    terms: dict[int, Fraction] = {}
    for t in range(1, d):
        e = (quarter + s * j + t * w_exp) % n
        terms[e] = terms.get(e, Fraction(0)) + Fraction(2 * t, d)
    return CyclotomicNumber.from_exponents(n, terms)


def cos_pi_frac(j: int, m: int) -> CyclotomicNumber:
    """Exact cos(j*pi/m) at conductor 2m."""
    n = 2 * m
    return CyclotomicNumber.from_exponents(n, {j % n: Fraction(1, 2), -j % n: Fraction(1, 2)})


@lru_cache(maxsize=None)
def quadratic_gauss_sum(p: int) -> CyclotomicNumber:
    """sum_{a=1}^{p-1} (a/p) zeta_p^a for an odd prime p."""
    return CyclotomicNumber.from_exponents(p, {a: jacobi(a, p) for a in range(1, p)})


@lru_cache(maxsize=None)
def sqrt_int(m: int) -> CyclotomicNumber:
    """The positive square root of a positive integer as a cyclotomic number.

    Odd primes use the quadratic Gauss sum (equal to sqrt(p) or i*sqrt(p)
    under the standard embedding); 2 uses zeta_8 + zeta_8^-1.
    """
    if m < 1:
        raise ValueError(f"sqrt_int needs a positive integer, got {m}")
    square, free = 1, 1
    for p, e in factorize(m):
        square *= p ** (e // 2)
        if e % 2:
            free *= p
    result = CyclotomicNumber.from_rational(square)
    for p, _ in factorize(free):
        if p == 2:
            root = CyclotomicNumber.from_exponents(8, {1: 1, 7: 1})
        elif p % 4 == 1:
            root = quadratic_gauss_sum(p)
        else:
            # g_p = i sqrt(p)  =>  sqrt(p) = -i g_p
            root = quadratic_gauss_sum(p) * (-imag_unit())
        result = result * root
    return result


# ---------------------------------------------------------------------------
# Galois elements


class GaloisElement:
    """sigma_k in Gal(Q(zeta_n)/Q), with k reduced into 1..n-1 (k = 1 for n <= 2)."""

    __slots__ = ("k", "n")

    def __init__(self, k: int, n: int):
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        if gcd(k, n) != 1:
            raise ValueError(f"k={k} is not coprime to n={n} (gcd {gcd(k, n)})")
        self.k = k % n if n > 1 else 1
        if self.k == 0:
            self.k = 1
        self.n = n

    def __call__(self, x: CyclotomicNumber) -> CyclotomicNumber:
        return galois_apply(self, x)

    def __mul__(self, other: GaloisElement) -> GaloisElement:
        n = lcm(self.n, other.n)
        return GaloisElement(self.k * other.k % n, n) if n > 1 else GaloisElement(1, 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisElement) and (self.k, self.n) == (other.k, other.n)

    def __hash__(self) -> int:
        return hash((self.k, self.n))

    def __repr__(self) -> str:
        return f"GaloisElement(k={self.k}, n={self.n})"


def galois_apply(sigma: GaloisElement | int, x: CyclotomicNumber) -> CyclotomicNumber:
    """Apply sigma_k to x.  An integer k is accepted in place of a GaloisElement.

    When sigma's modulus differs from the conductor of x, both are lifted to
    the lcm conductor (k must then be coprime to it).
    """
    if isinstance(sigma, GaloisElement):
        if x.conductor % sigma.n and sigma.n % x.conductor:
            x = x.embed(lcm(x.conductor, sigma.n))
        elif sigma.n > x.conductor:
            x = x.embed(sigma.n)
        k = sigma.k
    else:
        k = int(sigma)
    return x.galois(k)


def embed(x: CyclotomicNumber, m: int) -> CyclotomicNumber:
    return x.embed(m)


def cyclo_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    """Dispatch ``op`` in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conjugates(x: CyclotomicNumber) -> list[CyclotomicNumber]:
    """Distinct Galois conjugates of x, ordered by the smallest k producing them."""
    seen: dict[tuple, CyclotomicNumber] = {}
    for k in units(x.conductor):
        y = x.galois(k)
        key = (y.numerators, y.denominator)
        if key not in seen:
            seen[key] = y
    return list(seen.values())


def product(values: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
    """Balanced product tree (keeps intermediate sizes even)."""
    items = list(values)
    if not items:
        return CyclotomicNumber.from_rational(1)
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def algebraic_norm(x: CyclotomicNumber) -> Fraction:
    """N_{Q(zeta_n)/Q}(x) at the stored conductor n: product of all sigma_k(x)."""
    if x.is_rational():
        return x.to_rational() ** euler_phi(x.conductor)
    result = product([x.galois(k) for k in units(x.conductor)])
    if not result.is_rational():
        raise AssertionError("norm is not rational; representation is corrupt")
    return result.to_rational()
