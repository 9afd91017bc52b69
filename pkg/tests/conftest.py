import pytest

from symatroid import catalog, smatroid

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def path3_matroid():
    return smatroid.bases_from_representation(catalog.path3())


@pytest.fixture(scope="session")
def k3_matroid():
    return smatroid.bases_from_representation(catalog.k3())


@pytest.fixture(scope="session")
def qss6_matroid():
    return smatroid.bases_from_representation(catalog.qss6())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
