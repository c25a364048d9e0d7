from __future__ import annotations

import pytest

# criterion number -> (label, passed, note), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def record():
    def _record(num: int, label: str, passed: bool, note: str = "") -> None:
        ACCEPTANCE[num] = (label, passed, note)
        print(f"[criterion {num:2d}] {'PASS' if passed else 'FAIL'}  {label}  {note}".rstrip())

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        label, passed, note = ACCEPTANCE[num]
        line = f"[criterion {num:2d}] {'PASS' if passed else 'FAIL'}  {label}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
