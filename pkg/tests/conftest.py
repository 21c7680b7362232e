from __future__ import annotations

import mpmath
import pytest

from wittsig.exact import CyclotomicNumber

ORACLE_DPS = 155  # about 512 bits


def numeric(x: CyclotomicNumber) -> mpmath.mpc:
    """Independent float evaluation sum c_i exp(2 pi i e/n) at ~512 bits."""
    with mpmath.workdps(ORACLE_DPS):
        n = x.conductor
        total = mpmath.mpc(0)
        for e, c in enumerate(x.coeffs):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * e) / n)
        return total


def close(a, b, tol=mpmath.mpf(10) ** -60) -> bool:
    with mpmath.workdps(ORACLE_DPS):
        return abs(mpmath.mpc(a) - mpmath.mpc(b)) < tol


@pytest.fixture(autouse=True)
def _oracle_precision():
    # numeric oracles in tests are compared at 1e-60, so evaluate them at high precision
    with mpmath.workdps(ORACLE_DPS):
        yield


@pytest.fixture
def oracle():
    return numeric


# acceptance lines are collected here and printed in the terminal summary
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {desc}")
