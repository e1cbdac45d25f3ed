import sys
from fractions import Fraction

import pytest


def nested_cf(seq):
    """Reference evaluation of [a1, ..., an] by direct nesting, in Fractions.

    Returns None for infinity.
    """
    value = None
    for a in seq:
        if value is None:
            value = Fraction(a)
        elif value == 0:
            value = None
        else:
            value = a + 1 / value
    return value


@pytest.fixture
def cf_oracle():
    return nested_cf


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
