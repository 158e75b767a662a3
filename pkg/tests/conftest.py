import itertools
from math import lcm

import pytest

from eqbrauer.abelian import divisors, group_from_order_profile


def enumerate_solutions(moduli, constraints, modulus):
    """Structure of the solution set, by listing every assignment."""
    sols = [
        x
        for x in itertools.product(*(range(m) for m in moduli))
        if all(sum(c * v for c, v in zip(row, x)) % modulus == 0 for row in constraints)
    ]
    exponent = lcm(*moduli) if moduli else 1
    profile = {
        e: sum(all((e * v) % m == 0 for v, m in zip(x, moduli)) for x in sols)
        for e in divisors(exponent)
    }
    return group_from_order_profile(profile)


@pytest.fixture
def brute_solution_group():
    return enumerate_solutions


_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """Record the outcome line for one numbered acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE[number] = f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        print(_ACCEPTANCE[number])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
