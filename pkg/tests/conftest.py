from fractions import Fraction

import pytest

from heckesym.linalg import Operator
from heckesym.symmetry import conjugate_R, standard_R, super_R


@pytest.fixture(scope="session")
def std1():
    return standard_R(1)


@pytest.fixture(scope="session")
def std2():
    return standard_R(2)


@pytest.fixture(scope="session")
def std3():
    return standard_R(3)


@pytest.fixture(scope="session")
def sup11():
    return super_R(1, 1)


@pytest.fixture(scope="session")
def sup21():
    return super_R(2, 1)


@pytest.fixture(scope="session")
def conj11(sup11):
    # not orthogonal, so the conjugate R is no longer a symmetric matrix
    g = Operator([[2, 1], [Fraction(1, 3), 1]])
    return conjugate_R(sup11, g)


# Lines recorded by test_acceptance.py, echoed after the run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
