import os

import pytest

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}

EXTENDED = os.environ.get("SIGMA_LAB_EXTENDED") == "1"


@pytest.fixture
def report():
    """Record one acceptance line; prints it and returns the verdict."""
    def _report(number: int, name: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} [{number:>2}] {name}" + (f": {detail}" if detail else "")
        print(line)
        ACCEPTANCE[number] = (name, ok, detail)
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[number]
        line = f"{'PASS' if ok else 'FAIL'} [{number:>2}] {name}"
        terminalreporter.write_line(line + (f" ({detail})" if detail and not ok else ""))
