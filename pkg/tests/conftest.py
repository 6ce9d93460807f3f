import numpy as np
import pytest

from sine_moments import divisor_sieve
from sine_moments.predictions import ShiftConfig

# one line per acceptance criterion, echoed after the test run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table_1e6():
    return divisor_sieve(10 ** 6)


@pytest.fixture(scope="session")
def table_small():
    return divisor_sieve(10 ** 4)


def separated_shifts(rng, count, min_gap=0.05, lo=-1.0, hi=1.0):
    """Uniform shifts with all pairwise gaps > min_gap, so pole-bearing
    denominators stay well conditioned."""
    while True:
        x = rng.uniform(lo, hi, count)
        if np.min(np.diff(np.sort(x))) > min_gap:
            return x


def random_config(rng, M, min_gap=0.05):
    s = separated_shifts(rng, 2 * M, min_gap)
    return ShiftConfig(M, s[:M], s[M:])
