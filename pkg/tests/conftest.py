import math

import pytest

from movsig.channel import ArrayConfig, UserGeometry

F_A = 1e10

ACCEPTANCE_LINES = []


@pytest.fixture
def record_acceptance():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_LINES.append((number, title, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_LINES):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}  {detail}")


def make_users(theta1, theta2, d1=10.0, d2=10.0):
    return UserGeometry(d1, theta1), UserGeometry(d2, theta2)


def cfg_for(n, f_a=F_A):
    return ArrayConfig.from_reference_frequency(n, f_a)


HALF_PI = math.pi / 2
