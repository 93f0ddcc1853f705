import numpy as np
import pytest
import scipy.linalg

from anisorabi import ModelParams


@pytest.fixture
def plane_params():
    """Parameter factory for the omega = 1, Omega = 0.3 plane."""

    def make(g, gprime):
        return ModelParams(1.0, 0.3, g, gprime)

    return make


def ladder_generator(dim):
    """Truncated a^+ - a."""
    sub = np.diag(np.sqrt(np.arange(1, dim)), -1)
    return sub - sub.T


def expm_displacement(lam, dim):
    """exp[lam (a^+ - a)] by scaling and squaring on a truncated generator."""
    return scipy.linalg.expm(lam * ladder_generator(dim))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def report(criterion, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
