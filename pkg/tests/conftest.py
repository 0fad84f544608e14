import math
from functools import lru_cache

import pytest

from airywell import Potential, SolverConfig, exact_spectrum

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def exact_levels(z0sq: float, k: int = 9):
    pot = Potential.dwp_from_barrier(z0sq)
    cfg = SolverConfig(z_c=10 * math.sqrt(z0sq), n_max=200)
    return exact_spectrum(pot, cfg, k)


@pytest.fixture
def exact_dwp():
    return exact_levels
