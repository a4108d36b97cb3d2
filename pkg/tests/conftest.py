import pytest

# Acceptance criteria append (label, ok) here; printed at the end of the run.
ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    def record(label, ok):
        ACCEPTANCE_LINES.append((label, bool(ok)))
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
