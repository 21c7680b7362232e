"""Complete anisotropy of D_4: enumerate the candidate connected etale
algebras L = 1 + a1 Z1 + a2 Z2 and eliminate every nontrivial one.

Stages: trivial-twist census in C_4, the two local dimensions d1 and d2,
bounds from dim(D_4)/dim(L)^2 >= 1, total positivity, integrality of the
norm of dim(D_4)/dim(L)^2, and the final "= 1 or >= 2" exclusion.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import nstr

from .exact import (
    CyclotomicNumber,
    Sign,
    certified_sign,
    compare,
    conjugates,
    is_totally_positive,
    product,
)
from .invariants import category_data, dim_local
from .roots import Weight, weight_from_omegas

RANK = 4

# the census as listed in fundamental-weight notation
X_OMEGAS = ({2: 2}, {2: 2, 1: 4}, {2: 2, 3: 4}, {2: 2, 4: 4})
Y_OMEGAS = ({1: 2, 2: 1, 3: 2}, {1: 2, 2: 1, 4: 2}, {2: 1, 3: 2, 4: 2}, {1: 2, 2: 1, 3: 2, 4: 2})

ASSUMPTIONS = (
    "connected etale algebras in a pseudounitary braided fusion category have trivial twists",
    "trivial-twist objects of D_4 are free-module images of trivial-twist objects of C_4",
    "the A_4 action on X and Y is free and transitive (checked here only through equal twists and qdims)",
    "dim of a local-module category is dim(D_4)/dim(L)^2, an algebraic integer, and is 1 or >= 2",
    "dim(L) of a connected etale algebra is totally positive",
)


class CensusError(AssertionError):
    """A stage disagrees with the expected D_4 data."""


def _zeta7_combo(a: int, b: int, c: int, const: int) -> CyclotomicNumber:
    """a(z+z^6) + b(z^2+z^5) + c(z^3+z^4) + const with z = zeta_7."""
    return CyclotomicNumber.from_exponents(7, {0: const, 1: a, 6: a, 2: b, 5: b, 3: c, 4: c})


D1_EXPECTED = _zeta7_combo(28, 14, 0, 33)
D2_EXPECTED = _zeta7_combo(126, 56, 0, 157)
DIM_D4_EXPECTED = _zeta7_combo(269, 873, 1357, 0) * -196


def _dec(x: CyclotomicNumber, digits: int = 12) -> str:
    return nstr(x.to_complex(digits + 10).real, digits)


@dataclass(frozen=True)
class Census:
    unit: Weight
    invertibles: tuple[Weight, ...]
    groups: tuple[tuple[Weight, ...], ...]  # remaining trivial-twist objects grouped by qdim
    group_qdims: tuple[CyclotomicNumber, ...]

    @property
    def count(self) -> int:
        return 1 + len(self.invertibles) + sum(len(g) for g in self.groups)


def trivial_twist_objects(r: int = RANK) -> Census:
    """All alcove objects of C_r with twist 1, split into unit / invertibles / qdim classes.

    For r = 4 the result is checked against the expected X and Y lists and a
    CensusError is raised on any difference.
    """
    data = category_data(r)
    one = CyclotomicNumber.from_rational(1)
    unit = data.alcove[0]
    invertibles, rest = [], {}
    for lam, t, d in zip(data.alcove, data.twist_exponents, data.qdims):
        if t != 0 or lam == unit:
            continue
        if d == one:
            invertibles.append(lam)
        else:
            rest.setdefault(d, []).append(lam)
    keys = sorted(rest, key=lambda d: d.to_complex(30).real)
    census = Census(
        unit,
        tuple(invertibles),
        tuple(tuple(sorted(rest[k])) for k in keys),
        tuple(keys),
    )
    if r == RANK:
        _check_census(census)
    return census


def expected_groups() -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
    x = tuple(sorted(weight_from_omegas(RANK, m) for m in X_OMEGAS))
    y = tuple(sorted(weight_from_omegas(RANK, m) for m in Y_OMEGAS))
    return x, y


def _check_census(c: Census) -> None:
    x, y = expected_groups()
    if c.count != 12 or len(c.invertibles) != 3:
        raise CensusError(f"expected 12 trivial-twist objects with 3 invertibles, got {c.count}")
    if c.groups != (x, y):
        raise CensusError(f"trivial-twist classes {c.groups} differ from X, Y = {x}, {y}")


def local_dims() -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """(d1, d2): the common qdim of the X weights and of the Y weights, minimized to Q(zeta_7)."""
    census = trivial_twist_objects(RANK)
    d1, d2 = (d.minimize_conductor() for d in census.group_qdims)
    if d1 != D1_EXPECTED:
        raise CensusError("d1 differs from 28(z+z^6)+14(z^2+z^5)+33")
    if d2 != D2_EXPECTED:
        raise CensusError("d2 differs from 126(z+z^6)+56(z^2+z^5)+157")
    return d1, d2


def dim_D4() -> CyclotomicNumber:
    d = dim_local(RANK).minimize_conductor()
    if d != DIM_D4_EXPECTED:
        raise CensusError("dim(D_4) differs from -196[269(z+z^6)+873(z^2+z^5)+1357(z^3+z^4)]")
    return d


def max_multiplicity(total: CyclotomicNumber, d: CyclotomicNumber) -> int:
    """Largest a >= 0 with total / (1 + a d)^2 >= 1, by certified comparisons."""
    if certified_sign(d - 1) != Sign.POSITIVE:
        raise ValueError("need d > 1")
    a = 0
    while True:
        x = (d * (a + 1) + 1)
        if compare(total, x * x) == Sign.NEGATIVE:
            return a
        a += 1


def candidate_bounds() -> tuple[int, int]:
    d1, d2 = local_dims()
    total = dim_D4()
    return max_multiplicity(total, d1), max_multiplicity(total, d2)


def norm_over_own_field(x: CyclotomicNumber) -> Fraction:
    """Norm from Q(x) to Q: the product of the distinct Galois conjugates."""
    return product(conjugates(x)).to_rational()


@dataclass
class EtaleCandidate:
    a1: int
    a2: int
    dim: CyclotomicNumber
    totally_positive: bool
    norm_integral: bool | None = None  # None: not reached
    norm: Fraction | None = None
    ratio_admissible: bool | None = None
    ratio: CyclotomicNumber | None = None
    conjugate_values: tuple[str, ...] = ()

    @property
    def survives(self) -> bool:
        return bool(self.totally_positive and self.norm_integral and self.ratio_admissible)

    def to_dict(self) -> dict:
        return {
            "a1": self.a1,
            "a2": self.a2,
            "dim": _dec(self.dim),
            "conjugates": list(self.conjugate_values),
            "totally_positive": self.totally_positive,
            "norm_integral": self.norm_integral,
            "norm": None if self.norm is None else str(self.norm),
            "ratio": None if self.ratio is None else _dec(self.ratio),
            "ratio_admissible": self.ratio_admissible,
        }


def ratio_admissible(ratio: CyclotomicNumber) -> bool:
    """A global dimension of a pseudounitary category is 1 or >= 2."""
    if ratio == CyclotomicNumber.from_rational(1):
        return True
    return compare(ratio, 2) != Sign.NEGATIVE


def run_filters(threads: int = 1) -> list[EtaleCandidate]:
    """Evaluate all nontrivial (a1, a2) within the bounds through the three filters."""
    d1, d2 = local_dims()
    total = dim_D4()
    b1, b2 = candidate_bounds()
    pairs = [(a1, a2) for a2 in range(b2 + 1) for a1 in range(b1 + 1) if (a1, a2) != (0, 0)]

    def stage1(pair):
        a1, a2 = pair
        dim = d1 * a1 + d2 * a2 + 1
        conj = tuple(_dec(c, 6) for c in sorted(conjugates(dim), key=lambda c: c.to_complex(30).real))
        return EtaleCandidate(a1, a2, dim, is_totally_positive(dim), conjugate_values=conj)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cands = list(pool.map(stage1, pairs))
    else:
        cands = [stage1(p) for p in pairs]
    for c in cands:
        if not c.totally_positive:
            continue
        ratio = total / (c.dim * c.dim)
        c.norm = norm_over_own_field(ratio)
        c.norm_integral = c.norm.denominator == 1
        if c.norm_integral:
            c.ratio = ratio
            c.ratio_admissible = ratio_admissible(ratio)
    return cands


def conjugate_table() -> dict[str, list[str]]:
    """Sorted decimal conjugates of d1 and d2 (the values other than d itself)."""
    out = {}
    for name, d in zip(("d1", "d2"), local_dims()):
        vals = sorted((c.to_complex(30).real for c in conjugates(d)), reverse=True)
        out[name] = [nstr(v, 6) for v in vals]
    return out


@dataclass
class AnisotropyReport:
    census: Census
    d1: CyclotomicNumber
    d2: CyclotomicNumber
    dim: CyclotomicNumber
    bounds: tuple[int, int]
    candidates: list[EtaleCandidate]
    verdict: str
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    @property
    def totally_positive(self) -> list[tuple[int, int]]:
        return [(c.a1, c.a2) for c in self.candidates if c.totally_positive]

    @property
    def norm_integral(self) -> list[tuple[int, int]]:
        return [(c.a1, c.a2) for c in self.candidates if c.norm_integral]

    @property
    def final_ratio(self) -> CyclotomicNumber | None:
        for c in self.candidates:
            if c.ratio is not None:
                return c.ratio
        return None

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "rank": RANK,
            "assumptions": list(self.assumptions),
            "census": {
                "unit": list(self.census.unit.coords2),
                "invertibles": [list(w.coords2) for w in self.census.invertibles],
                "X": [list(w.coords2) for w in self.census.groups[0]],
                "Y": [list(w.coords2) for w in self.census.groups[1]],
                "count": self.census.count,
                "coordinates": "doubled orthonormal",
            },
            # d1, d2 are the C_4 quantum dimensions of the underlying objects
            "d1": {"exact": "28(z7+z7^6)+14(z7^2+z7^5)+33", "decimal": _dec(self.d1),
                   "weight": list(self.census.groups[0][0].coords2)},
            "d2": {"exact": "126(z7+z7^6)+56(z7^2+z7^5)+157", "decimal": _dec(self.d2),
                   "weight": list(self.census.groups[1][0].coords2)},
            "dim": {"exact": "-196[269(z7+z7^6)+873(z7^2+z7^5)+1357(z7^3+z7^4)]", "decimal": _dec(self.dim, 15)},
            "conjugates": conjugate_table(),
            "bounds": list(self.bounds),
            "candidates": [c.to_dict() for c in self.candidates],
            "totally_positive": [list(p) for p in self.totally_positive],
            "norm_integral": [list(p) for p in self.norm_integral],
            "final_ratio": None if self.final_ratio is None else _dec(self.final_ratio),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [
            "D_4 anisotropy",
            f"trivial-twist objects in C_4: {self.census.count}",
            f"d1 = {_dec(self.d1)}   d2 = {_dec(self.d2)}   dim(D_4) = {_dec(self.dim, 15)}",
            f"bounds: a1 <= {self.bounds[0]}, a2 <= {self.bounds[1]}",
            "",
            f"{'a1':>3} {'a2':>3} {'dim(L)':>16} {'tot.pos':>8} {'norm int':>9} {'ratio':>10}",
        ]
        for c in self.candidates:
            lines.append(
                f"{c.a1:>3} {c.a2:>3} {_dec(c.dim, 10):>16} {_yn(c.totally_positive):>8} "
                f"{_yn(c.norm_integral):>9} {(_dec(c.ratio, 6) if c.ratio is not None else '-'):>10}"
            )
        lines += ["", f"verdict: {self.verdict}"]
        return "\n".join(lines) + "\n"


def _yn(v: bool | None) -> str:
    return "-" if v is None else ("yes" if v else "no")


VERDICT_OK = "completely anisotropic: no nontrivial connected etale algebra survives"


def anisotropy_report(threads: int = 1) -> AnisotropyReport:
    census = trivial_twist_objects(RANK)
    d1, d2 = local_dims()
    total = dim_D4()
    bounds = candidate_bounds()
    cands = run_filters(threads)
    survivors = [c for c in cands if c.survives]
    verdict = VERDICT_OK if not survivors else f"candidates survive: {[(c.a1, c.a2) for c in survivors]}"
    return AnisotropyReport(census, d1, d2, total, bounds, cands, verdict)
