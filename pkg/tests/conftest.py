import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coquasi import zoo as cz  # noqa: E402


@pytest.fixture(scope="session")
def catalogue():
    return cz.zoo()


@pytest.fixture(scope="session")
def z2w():
    return cz.z2_omega()


@pytest.fixture(scope="session")
def z2():
    return cz.z2_hopf()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
