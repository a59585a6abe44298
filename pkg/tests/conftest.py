import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from fockpol.state import TruncationPolicy

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# deep cut so direct sums are limited by rounding, not by the dropped tail
DEEP = TruncationPolicy(tail_tol=1e-16)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def deep_policy():
    return DEEP


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
