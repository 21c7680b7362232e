"""Root data of types B and D, the level-2r alcove of D_r, and root counts.

Weights are stored with doubled coordinates in the orthonormal basis
e_1..e_r so that spin weights (half-integer entries) stay exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Weight:
    """A weight given by doubled orthonormal coordinates ``coords2``."""

    coords2: tuple[int, ...]

    @classmethod
    def from_coords(cls, coords: Sequence[Fraction | int]) -> Weight:
        doubled = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            doubled.append(int(c2))
        return cls(tuple(doubled))

    @property
    def rank(self) -> int:
        return len(self.coords2)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords2)

    def __add__(self, other: Weight) -> Weight:
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: Weight) -> Weight:
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __rmul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords2))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_rank(a: Weight, b: Weight) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def inner(a: Weight, b: Weight) -> Fraction:
    """Euclidean pairing (a|b)."""
    _check_rank(a, b)
    return Fraction(sum(x * y for x, y in zip(a.coords2, b.coords2)), 4)


def zero_weight(r: int) -> Weight:
    return Weight((0,) * r)


def unit_vector(r: int, i: int) -> Weight:
    """e_i, 1-based."""
    c = [0] * r
    c[i - 1] = 2
    return Weight(tuple(c))


def fundamental_weight(r: int, j: int) -> Weight:
    """Fundamental weight omega_j of D_r (1-based)."""
    if not 1 <= j <= r:
        raise ValueError(f"omega_{j} undefined for D_{r}")
    if j <= r - 2:
        return Weight(tuple(2 if i < j else 0 for i in range(r)))
    if j == r - 1:
        return Weight(tuple([1] * (r - 1) + [-1]))
    return Weight(tuple([1] * r))


def weight_from_omegas(r: int, multiplicities: dict[int, int]) -> Weight:
    """sum_j m_j omega_j for D_r."""
    out = zero_weight(r)
    for j, m in multiplicities.items():
        out = out + m * fundamental_weight(r, j)
    return out


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    positive_roots: tuple[Weight, ...]
    rho: Weight
    dual_coxeter: int


def build_root_system(type_: str, rank: int) -> RootSystem:
    """Positive roots, rho and h^vee for D_rank or B_rank."""
    if rank < 2:
        raise ValueError(f"rank must be at least 2, got {rank}")
    t = type_.upper()
    r = rank
    roots = []
    for j in range(1, r + 1):
        for k in range(j + 1, r + 1):
            ej, ek = unit_vector(r, j), unit_vector(r, k)
            roots.append(ej - ek)
            roots.append(ej + ek)
    if t == "D":
        rho = Weight(tuple(2 * (r - i) for i in range(1, r + 1)))
        h = 2 * r - 2
    elif t == "B":
        roots.extend(unit_vector(r, i) for i in range(1, r + 1))
        rho = Weight(tuple(2 * r - 2 * i + 1 for i in range(1, r + 1)))
        h = 2 * r - 1
    else:
        raise ValueError(f"unsupported type {type_!r}; only B and D")
    return RootSystem(t, r, tuple(roots), rho, h)


def is_dominant_D(w: Weight) -> bool:
    c = w.coords2
    r = len(c)
    if len({x % 2 for x in c}) > 1:
        return False
    if any(c[i] < c[i + 1] for i in range(r - 2)):
        return False
    return c[r - 2] >= abs(c[r - 1]) if r >= 2 else c[0] >= 0


def level_pairing(w: Weight) -> int:
    """(w|e_1 + e_2), an integer for every D_r weight."""
    return (w.coords2[0] + w.coords2[1]) // 2


def in_alcove_D(w: Weight, r: int) -> bool:
    """Dominant with (w|e_1+e_2) <= 2r.

    For r = 2 the coordinate w_2 may be negative and e_1 - e_2 is a second
    highest root, so (w|e_1-e_2) <= 2r is imposed too; for r >= 3 it is implied.
    """
    if w.rank != r or not is_dominant_D(w):
        return False
    c = w.coords2
    return c[0] + abs(c[1]) <= 4 * r


def alcove_D(r: int) -> list[Weight]:
    """Dominant D_r weights with (lambda|e_1+e_2) <= 2r, lexicographically ordered.

    Backtracks over doubled coordinates, largest first; the level bound
    prunes at depth 2.
    """
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    bound2 = 4 * r  # doubled level bound on c1 + c2
    out: list[Weight] = []

    def extend(prefix: list[int], parity: int) -> None:
        depth = len(prefix)
        if depth == r:
            out.append(Weight(tuple(prefix)))
            return
        if depth == 0:
            hi = bound2
        elif depth == 1:
            hi = min(prefix[0], bound2 - prefix[0])
        else:
            hi = prefix[-1]
        # the last coordinate may be negative: |c_r| <= c_{r-1}
        lo = -hi if depth == r - 1 else parity
        for c in range(lo, hi + 1):
            if c % 2 == parity:
                extend(prefix + [c], parity)

    for parity in (0, 1):
        extend([], parity)
    out.sort()
    return out


def alcove_D_bruteforce(r: int) -> list[Weight]:
    """Second enumeration: filter the full box of doubled coordinates."""
    from itertools import product as cartesian

    span = range(-4 * r, 4 * r + 1)
    return sorted(
        Weight(c) for c in cartesian(span, repeat=r) if in_alcove_D(Weight(c), r)
    )


def dump_alcove(r: int, stream: IO[str]) -> int:
    """Write the alcove as JSON lines; returns the number of records."""
    count = 0
    for w in alcove_D(r):
        stream.write(json.dumps({"coords2": list(w.coords2), "level_pairing": level_pairing(w)}) + "\n")
        count += 1
    return count


# ---------------------------------------------------------------------------
# root-height counts


def d_count(r: int, j: int) -> int:
    """#{alpha in Delta_+(D_r) : (alpha|rho) = j} in closed form."""
    if 1 <= j <= r - 1:
        return r - j // 2
    if r <= j <= 2 * r - 3:
        return r - (j + 2) // 2  # ceil((j+1)/2)
    return 0


def d_count_bruteforce(r: int, j: int) -> int:
    """Literal count over the positive roots of D_r (r >= 1)."""
    count = 0
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            # (e_a - e_b | rho) = b - a, (e_a + e_b | rho) = 2r - a - b
            count += (b - a == j) + (2 * r - a - b == j)
    return count


def s_set(r: int) -> frozenset[int]:
    """{1 <= j <= 2r-3 : d_r(j) * j odd}."""
    return frozenset(j for j in range(1, 2 * r - 2) if (d_count(r, j) * j) % 2)


def s_set_cases(r: int) -> frozenset[int]:
    """The same set from its four residue-class descriptions.

    Indexing: r = 4k+1, 4k+2, 4k+3 (k >= 0) and r = 4k (k >= 1).
    """
    k = r // 4 if r % 4 == 0 else (r - 1) // 4
    if r % 4 == 1:
        a = [4 * m + 1 for m in range(k)] + [4 * n + 3 for n in range(k, 2 * k)]
    elif r % 4 == 2:
        a = [4 * m + 3 for m in range(k)] + [4 * n + 1 for n in range(k + 1, 2 * k + 1)]
    elif r % 4 == 3:
        a = [4 * m + 1 for m in range(k + 1)] + [4 * n + 3 for n in range(k, 2 * k + 1)]
    else:
        a = [4 * m + 3 for m in range(k)] + [4 * n + 1 for n in range(k, 2 * k)]
    return frozenset(a)


def c_count(b: int, j: int) -> int:
    """b - ceil(j/2) for 1 <= j <= 2b-2, else 0."""
    if 1 <= j <= 2 * b - 2:
        return b - (j + 1) // 2
    return 0


def root_heights(rs: RootSystem) -> Iterator[Fraction]:
    """(alpha|rho) over the positive roots."""
    for alpha in rs.positive_roots:
        yield inner(alpha, rs.rho)
