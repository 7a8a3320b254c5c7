import random
import time

import pytest

from nashift.padic import PrimeConfig

ACCEPTANCE_LINES = []
_START = time.perf_counter()


@pytest.fixture
def rng():
    return random.Random(20241018)


@pytest.fixture(params=[2, 3, 5], ids=lambda p: f"p{p}")
def cfg(request):
    return PrimeConfig(request.param, 24)


@pytest.fixture
def cfg5():
    return PrimeConfig(5, 24)


SUITE_LIMIT_SECONDS = 120


def pytest_sessionfinish(session, exitstatus):
    # the time budget can only be judged once every test has run
    elapsed = time.perf_counter() - _START
    session.config._suite_elapsed = elapsed
    if elapsed >= SUITE_LIMIT_SECONDS and exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    elapsed = getattr(config, "_suite_elapsed", time.perf_counter() - _START)
    verdict = "PASS" if elapsed < SUITE_LIMIT_SECONDS else "FAIL"
    terminalreporter.write_line(
        f"[{verdict}] 10. full test suite wall time: {elapsed:.1f} s (limit {SUITE_LIMIT_SECONDS} s)")
