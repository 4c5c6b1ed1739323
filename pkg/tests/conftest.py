"""Shared pytest plumbing.

The acceptance module registers one line per criterion here; the hook
reprints them after the run so the verdicts are visible without -s.
"""

_criterion_lines: list[str] = []


def record_criterion(number: int, name: str, passed: bool, detail: str = "") -> str:
    status = "PASS" if passed else "FAIL"
    line = f"[criterion {number:02d}] {name}: {status}"
    if detail:
        line += f" ({detail})"
    _criterion_lines.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _criterion_lines:
        terminalreporter.write_line(line)
