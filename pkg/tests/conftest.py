import pytest

CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, text, passed)."""

    def record(number, text, passed):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {text}"
        CRITERIA.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA):
            terminalreporter.write_line(line)
