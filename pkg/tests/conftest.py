from fractions import Fraction
from math import factorial

import pytest


def laguerre_sum(m, x):
    """Explicit finite sum for L_m(x), evaluated exactly in rationals."""
    x = Fraction(x)
    total = Fraction(0)
    for j in range(m + 1):
        total += Fraction((-1) ** j * factorial(m), factorial(j) ** 2 * factorial(m - j)) * x**j
    return float(total)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""

    def record(label):
        ACCEPTANCE_LINES.append((label, request.node))

    return record


def pytest_runtest_makereport(item, call):
    if call.when == "call":
        item.ecslab_outcome = "PASS" if call.excinfo is None else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, node in ACCEPTANCE_LINES:
        outcome = getattr(node, "ecslab_outcome", "FAIL")
        terminalreporter.write_line(f"[{outcome}] {label}")
