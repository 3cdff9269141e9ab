from fractions import Fraction

import pytest
from hypothesis import settings

from youngcalc.diagrams import Partition, Profile

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# strict profile with no symmetry, used wherever a "generic" diagram is needed
SKEW = Profile([(-3, 3), (-1, Fraction(7, 2)), (1, 3), (Fraction(5, 2), Fraction(5, 2))])


@pytest.fixture
def skew():
    return SKEW


def P(text: str) -> Partition:
    return Partition.parse(text)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
