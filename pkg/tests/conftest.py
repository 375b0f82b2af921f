from fractions import Fraction

import pytest

from triperi import FiniteSpace, PaperSpaceParams, make_paper_space, make_three_point_example


@pytest.fixture
def paper():
    return make_paper_space(PaperSpaceParams(scale=Fraction(1), window=64))


@pytest.fixture
def example_a():
    return make_three_point_example("A")


@pytest.fixture
def example_b():
    return make_three_point_example("B")


@pytest.fixture
def equilateral():
    return FiniteSpace(["x", "y", "z"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in mod.RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)
