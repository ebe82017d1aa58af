import pytest
from hypothesis import settings

settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")

# criterion number -> (title, outcome, note); filled by tests/test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, note: str = ""):
        ACCEPTANCE[number] = (title, ok, note)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, note = ACCEPTANCE[number]
        line = f"{'PASS' if ok else 'FAIL'} {number:>2}. {title}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
