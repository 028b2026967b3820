"""Shared pytest plumbing for the suite.

The acceptance tests register one line per criterion here; the summary
hook prints them at the end of the run so the verdicts are visible even
when everything passes.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
