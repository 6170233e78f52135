import itertools
import sys

import pytest
from hypothesis import HealthCheck, settings

from staircase_cauchy import validate

# property tests run under a fixed seed so every run sees the same examples
settings.register_profile("repro", derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

FIXTURE_SHAPES = [(1,), (1, 1), (1, 2), (2, 2), (1, 2, 3), (2, 4, 4, 4, 5, 5), (1, 1, 3, 3, 3, 4, 4)]
INTRO_SHAPE = (2, 4, 4, 4, 5, 5)


def all_shapes(max_columns: int, max_height: int):
    """Every staircase shape with 1..max_columns columns of length <= max_height."""
    for m in range(1, max_columns + 1):
        for cols in itertools.combinations_with_replacement(range(1, max_height + 1), m):
            yield validate(cols)


@pytest.fixture
def intro_shape():
    return validate(INTRO_SHAPE)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.result_lines():
        terminalreporter.write_line(line)
