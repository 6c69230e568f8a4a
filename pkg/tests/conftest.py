import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, _, _ in module.CRITERIA:
        line = module.RESULTS.get(key)
        if line is not None:
            terminalreporter.write_line(line)
