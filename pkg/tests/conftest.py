import pytest

from kreweras.bijection import phi
from kreweras.walks import enumerate_walks

# filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def excursion_images():
    """``{n: [(walk, image), ...]}`` for every excursion of size 0..3."""
    return {n: [(w, phi(w)) for w in enumerate_walks("excursion", n)] for n in range(4)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
