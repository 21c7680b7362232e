from __future__ import annotations

import json
from fractions import Fraction

import pytest

from wittsig.anisotropy import (
    D1_EXPECTED,
    D2_EXPECTED,
    DIM_D4_EXPECTED,
    VERDICT_OK,
    anisotropy_report,
    candidate_bounds,
    conjugate_table,
    dim_D4,
    expected_groups,
    local_dims,
    max_multiplicity,
    norm_over_own_field,
    ratio_admissible,
    run_filters,
    trivial_twist_objects,
)
from wittsig.exact import CyclotomicNumber, Sign, compare, conjugates, sqrt_int
from wittsig.invariants import category_data, qdim
from wittsig.roots import Weight, zero_weight


@pytest.fixture(scope="module")
def report():
    return anisotropy_report()


def test_census():
    c = trivial_twist_objects()
    assert c.count == 12
    assert c.unit == zero_weight(4)
    assert len(c.invertibles) == 3
    x, y = expected_groups()
    assert c.groups == (x, y)
    assert Weight.from_coords((2, 2, 0, 0)) in x


def test_census_is_exhaustive():
    data = category_data(4)
    listed = {trivial_twist_objects().unit, *trivial_twist_objects().invertibles}
    for g in trivial_twist_objects().groups:
        listed.update(g)
    trivial = {lam for lam, t in zip(data.alcove, data.twist_exponents) if t == 0}
    assert trivial == listed


def test_groups_share_qdims():
    x, y = expected_groups()
    for group, d in zip((x, y), (D1_EXPECTED, D2_EXPECTED)):
        for lam in group:
            assert qdim(4, lam) == d


def test_local_dims_and_total():
    d1, d2 = local_dims()
    assert d1 == D1_EXPECTED and d2 == D2_EXPECTED
    assert abs(float(d1.to_complex(20).real) - 61.685) < 1e-3
    assert abs(float(d2.to_complex(20).real) - 289.197) < 1e-3
    total = dim_D4()
    assert total == DIM_D4_EXPECTED
    assert abs(float(total.to_complex(20).real) - 489669.5) < 0.5


def test_conjugates_of_local_dims():
    table = conjugate_table()
    d1 = sorted(float(v) for v in table["d1"])
    d2 = sorted(float(v) for v in table["d2"])
    assert d1[0] == pytest.approx(-4.688, abs=1e-3)
    assert d1[1] == pytest.approx(0.003, abs=1e-3)
    assert d2[0] == pytest.approx(-0.213, abs=1e-3)
    assert d2[1] == pytest.approx(0.016, abs=1e-3)


def test_bounds():
    assert candidate_bounds() == (11, 2)
    total = dim_D4()
    assert max_multiplicity(total, total) == 0
    with pytest.raises(ValueError):
        max_multiplicity(total, CyclotomicNumber.from_rational(Fraction(1, 2)))


def test_filters():
    cands = run_filters()
    assert len(cands) == 35
    assert (0, 0) not in {(c.a1, c.a2) for c in cands}
    tp = [(c.a1, c.a2) for c in cands if c.totally_positive]
    assert tp == [(0, 1), (0, 2)]
    ni = [(c.a1, c.a2) for c in cands if c.norm_integral]
    assert ni == [(0, 2)]
    # monotone: later stages only see survivors of earlier ones
    for c in cands:
        if not c.totally_positive:
            assert c.norm_integral is None and c.ratio is None
        elif not c.norm_integral:
            assert c.ratio is None
    assert not any(c.survives for c in cands)


def test_norms_of_survivors():
    cands = {(c.a1, c.a2): c for c in run_filters()}
    assert cands[(0, 1)].norm == Fraction(5764801, 841)
    assert cands[(0, 2)].norm == 3136


def test_final_ratio_certified():
    d2 = D2_EXPECTED
    ratio = DIM_D4_EXPECTED / (1 + 2 * d2) ** 2
    assert compare(ratio, 1) == Sign.POSITIVE
    assert compare(ratio, 2) == Sign.NEGATIVE
    assert abs(float(ratio.to_complex(20).real) - 1.459) < 1e-3
    assert not ratio_admissible(ratio)


def test_ratio_admissible():
    assert ratio_admissible(CyclotomicNumber.from_rational(1))
    assert ratio_admissible(CyclotomicNumber.from_rational(2))
    assert not ratio_admissible(sqrt_int(2))


def test_norm_over_own_field():
    x = sqrt_int(5).embed(40)
    assert norm_over_own_field(x) == -5
    assert norm_over_own_field(CyclotomicNumber.from_rational(7, 12)) == 7
    assert len(conjugates(D1_EXPECTED)) == 3


def test_report(report):
    assert report.verdict == VERDICT_OK
    assert report.bounds == (11, 2)
    assert report.totally_positive == [(0, 1), (0, 2)]
    assert report.norm_integral == [(0, 2)]
    doc = json.loads(report.to_json())
    assert doc["schema_version"] == 1
    assert doc["census"]["count"] == 12
    assert doc["dim"]["exact"].startswith("-196[")
    assert doc["d1"]["weight"] == [4, 4, 0, 0]
    assert float(doc["final_ratio"]) == pytest.approx(1.459, abs=1e-3)
    assert any("trivial twist" in a for a in doc["assumptions"])


def test_report_deterministic(report):
    assert anisotropy_report().to_json() == report.to_json()
    assert anisotropy_report(threads=3).to_json() == report.to_json()


def test_report_text(report):
    text = report.to_text()
    assert "verdict: " + VERDICT_OK in text
    assert text.count("\n") > 35
