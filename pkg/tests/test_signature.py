from __future__ import annotations

import json
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittsig.exact import Sign, certified_sign, jacobi, sqrt_int
from wittsig.signature import (
    FINITE_NOTE,
    Report,
    build_galois_element,
    check_periodicity_D,
    check_shift_B,
    conductor_B,
    conductor_D,
    family_conductor,
    ising_obstruction,
    pointed_signature,
    prime_sequence,
    product_signature,
    profile_B,
    profile_D,
    signature,
    signature_B,
    signature_B_closed,
    signature_D,
    signature_D_closed,
    sqrt_dim,
    verify_BD_separation,
    verify_independence_D_even,
    verify_independence_D_odd,
    verify_jacobi_conditions,
    verify_pointed_jacobi,
    verify_s_parity,
    verify_sine_galois,
)

# -- basic signatures --------------------------------------------------------


@pytest.mark.parametrize("r", range(2, 9))
def test_identity_and_conjugation_are_positive(r):
    assert signature_D(r, 1) == Sign.POSITIVE
    assert signature_D(r, conductor_D(r) - 1) == Sign.POSITIVE


@pytest.mark.parametrize("b", range(2, 8))
def test_B_identity(b):
    assert signature_B(b, 1) == Sign.POSITIVE
    assert signature_B(b, conductor_B(b) - 1) == Sign.POSITIVE


@pytest.mark.parametrize(
    "family, rank, k, expected",
    [
        ("D", 5, 5, -1),
        ("D", 13, 13, -1),
        ("D", 4, 9, -1),
        ("D", 6, 5, -1),
        ("D", 12, 9, 1),
        ("B", 23, 9, 1),
        ("B", 23, 193, -1),
    ],
)
def test_proposition_signs(family, rank, k, expected):
    assert int(signature(family, rank, k)) == expected


def test_non_coprime_rejected_with_gcd():
    with pytest.raises(ValueError, match=r"gcd\(3, 36\) = 3"):
        signature_D(5, 3)
    with pytest.raises(ValueError):
        signature_B(3, 2)
    with pytest.raises(ValueError):
        signature("A", 3, 1)
    with pytest.raises(ValueError):
        signature_D(1, 1)


def test_k_canonicalized():
    assert signature_D(4, 9) == signature_D(4, 9 + conductor_D(4)) == signature_D(4, 9 - 3 * conductor_D(4))


def test_family_conductor():
    assert family_conductor("d", 4) == 28
    assert family_conductor("B", 23) == 368
    with pytest.raises(ValueError):
        family_conductor("E", 6)


# -- closed-form cross-checks --------------------------------------------------


@pytest.mark.parametrize("r", range(2, 7))
def test_D_closed_form(r):
    m = conductor_D(r)
    for k in range(1, m):
        if gcd(k, m) == 1:
            assert int(signature_D(r, k)) == signature_D_closed(r, k), k


@pytest.mark.parametrize("b", range(2, 8))
def test_B_closed_form(b):
    n = conductor_B(b)
    for k in range(1, n):
        if gcd(k, n) == 1:
            assert int(signature_B(b, k)) == signature_B_closed(b, k), k


# -- periodicity and profiles ------------------------------------------------


@pytest.mark.parametrize("r", [4, 5, 6])
def test_periodicity(r):
    rep = check_periodicity_D(r, window=300)
    assert rep.ok, rep.computed["violations"]
    assert rep.computed["profile"]["1"] == 1


def test_periodicity_small_ranks():
    for r in (2, 3):
        assert check_periodicity_D(r, window=200).ok


def test_profile_D_matches_periodicity():
    prof = profile_D(4)
    assert prof.modulus == 14
    assert sorted(prof.signs) == [1, 3, 5, 9, 11, 13]
    rep = check_periodicity_D(4, window=100)
    assert {int(a): s for a, s in rep.computed["profile"].items()} == prof.signs


def test_profile_B():
    prof = profile_B(3)
    assert prof.modulus == 48
    assert prof.signs[1] == 1
    assert len(prof.signs) == 16


# -- shift law ---------------------------------------------------------------


def test_shift_B_examples():
    rep = check_shift_B(3, 1, range(4))
    assert rep.ok
    assert rep.computed == [1, -1, 1, -1]
    rep = check_shift_B(23, 9, [0, 1])
    assert rep.ok and rep.computed == [1, -1]


@pytest.mark.parametrize("b", [3, 5, 7, 9])
def test_shift_B_all_k(b):
    for k in range(1, 8 * b, 4):
        if gcd(k, b) == 1:
            assert check_shift_B(b, k, range(3)).ok


def test_shift_B_preconditions():
    with pytest.raises(ValueError):
        check_shift_B(3, 3, [0])
    with pytest.raises(ValueError):
        check_shift_B(3, 9, [0])


# -- homomorphism property ---------------------------------------------------


def _random_queries(seed: int, count: int = 20):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = (rng.choice("DB"), rng.randint(2, 6))
        b = (rng.choice("DB"), rng.randint(2, 6))
        n = family_conductor(*a) * family_conductor(*b)
        k = rng.randrange(1, n)
        if gcd(k, n) == 1:
            out.append((a, b, k))
    return out


@pytest.mark.parametrize("a, b, k", _random_queries(2024, 20))
def test_homomorphism(a, b, k):
    assert product_signature([a, b], k) == signature(*a, k) * signature(*b, k)


def test_product_signature_single():
    assert product_signature([("D", 4)], 9) == signature_D(4, 9)


# -- pointed and Ising pieces ------------------------------------------------


def test_pointed_examples():
    assert pointed_signature(1, 7) == Sign.POSITIVE
    assert pointed_signature(5, 2) == Sign.NEGATIVE
    with pytest.raises(ValueError):
        pointed_signature(5, 5)
    with pytest.raises(ValueError):
        pointed_signature(0, 1)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97])
def test_pointed_is_jacobi(p):
    for k in range(1, p):
        assert int(pointed_signature(p, k)) == jacobi(k, p)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 10**4))
@settings(max_examples=30, deadline=None)
def test_pointed_multiplicative(h1, h2, k):
    k = 2 * k + 1
    if gcd(k, h1 * h2) != 1:
        return
    lhs = certified_sign((sqrt_int(h1) * sqrt_int(h2)).galois(k % (8 * h1 * h2)))
    assert lhs == pointed_signature(h1, k) * pointed_signature(h2, k)


def test_verify_pointed_jacobi():
    rep = verify_pointed_jacobi(100)
    assert rep.ok and rep.computed["checked"] > 0


def test_ising():
    assert ising_obstruction(0, 0)
    assert ising_obstruction(2, 7)
    for m in range(1, 40, 2):
        assert not any(ising_obstruction(m, ell) for ell in range(8))


def test_jacobi_conditions():
    rep = verify_jacobi_conditions([7, 23])
    assert rep.ok
    assert rep.computed[0]["jacobi"] == jacobi(9, 7) == 1
    assert jacobi(1, 23) == 1
    assert verify_jacobi_conditions([11, 43]).ok
    with pytest.raises(ValueError):
        verify_jacobi_conditions([13])


# -- CRT and prime sequences -------------------------------------------------


def test_build_galois_element():
    k = build_galois_element((21, 82), [146])
    assert k == 1169 and k % 82 == 21 and k % 146 == 1
    assert build_galois_element((1, 9), [14]) == 1
    k = build_galois_element((5, 18), [14, 26])
    assert k % 18 == 5 and k % 14 == 1 and k % 26 == 1
    assert all(gcd(k, m) == 1 for m in (18, 14, 26))


def test_build_galois_element_rejects():
    with pytest.raises(ValueError):
        build_galois_element((2, 4), [6])  # k = 2 mod 4 and 1 mod 6 incompatible
    with pytest.raises(ValueError):
        build_galois_element((3, 9), [2])  # k = 3 is not a unit mod 9


def test_prime_sequence():
    assert prime_sequence(9, 16, 2) == [41, 73]
    assert prime_sequence(7, 16, 1) == [7]
    assert prime_sequence(23, 160, 1) == [23]
    assert prime_sequence(11, 16, 3) == [11, 43, 59]
    with pytest.raises(ValueError):
        prime_sequence(4, 16, 1)


# -- independence and separation ---------------------------------------------


def test_independence_odd():
    rep = verify_independence_D_odd([41, 73], pin=0)
    assert rep.ok and rep.computed == [-1, 1]
    assert FINITE_NOTE in rep.notes
    rep = verify_independence_D_odd([41, 73], pin=1)
    assert rep.ok and rep.computed == [1, -1]
    rep = verify_independence_D_odd([41], pin=0)
    assert rep.ok and rep.computed == [-1] and rep.parameters["k"] % 82 == 21
    rep = verify_independence_D_odd([41], pin=None)
    assert rep.ok and rep.computed == [1]


def test_independence_rejects_bad_primes():
    with pytest.raises(ValueError):
        verify_independence_D_odd([17])
    with pytest.raises(ValueError):
        verify_independence_D_odd([41, 41])
    with pytest.raises(ValueError):
        verify_independence_D_even([11], [])


def test_independence_even():
    assert verify_independence_D_even([7], [], pin=(0, 0)).computed == [-1]
    assert verify_independence_D_even([], [11], pin=(1, 0)).computed == [-1]
    for pin in [(0, 0), (1, 0)]:
        rep = verify_independence_D_even([7], [11], pin=pin)
        assert rep.ok, rep.to_json()


def test_BD_separation():
    rep = verify_BD_separation(12)
    assert rep.ok
    assert rep.computed == {"D": 1, "B": [1, -1], "coprime": True}
    with pytest.raises(ValueError):
        verify_BD_separation(13)


# -- lemma batteries and reports ---------------------------------------------


def test_sine_galois_report():
    rep = verify_sine_galois(12)
    assert rep.ok and rep.computed["checked"] > 1000


def test_s_parity_report():
    assert verify_s_parity(200).ok


def test_report_json_roundtrip():
    rep = check_shift_B(3, 1, range(2))
    doc = json.loads(rep.to_json())
    assert set(doc) == {"claim", "parameters", "expected", "computed", "status", "notes"}
    assert doc["status"] == "ok"
    assert Report("x", {}, 1, 2, "fail").ok is False


def test_sqrt_dim_positive():
    for fam, rank in [("D", 3), ("B", 3), ("D", 6)]:
        assert certified_sign(sqrt_dim(fam, rank)) == Sign.POSITIVE
