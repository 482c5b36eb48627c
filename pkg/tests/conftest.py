import pytest

_criteria = []


@pytest.fixture
def record_criterion():
    """Record a pass/fail line for the acceptance summary."""

    def record(name, passed, detail=""):
        _criteria.append((name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name} {detail}".rstrip())
