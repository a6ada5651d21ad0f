from __future__ import annotations

import mpmath
import pytest


@pytest.fixture
def mp30():
    with mpmath.workdps(30):
        yield mpmath


def fw_oracle(upper, lower, z, n=400, dps=40):
    """Fox-Wright series summed termwise in extended precision."""
    with mpmath.workdps(dps):
        z = mpmath.mpf(z)
        total = mpmath.mpf(0)
        for k in range(n):
            num = mpmath.fprod(mpmath.gamma(a + k * A) for a, A in upper)
            den = mpmath.fprod(mpmath.rgamma(b + k * B) for b, B in lower)
            term = num * den * z**k / mpmath.factorial(k)
            total += term
            if k > 20 and abs(term) < mpmath.mpf(10) ** (-dps) * abs(total):
                break
        return float(total)


@pytest.fixture(scope="session")
def full_reports():
    """One full single-threaded verification run shared by the harness tests."""
    from foxwright.harness import run_suite

    return run_suite()


ACCEPTANCE_LINES: list[tuple[int, str]] = []


def record_criterion(number: int, passed: bool, detail: str) -> None:
    """Stash one acceptance line; all lines are printed in the terminal summary."""
    line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append((number, line))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
