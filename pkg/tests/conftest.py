from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from braidclass import normal_form

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "run_last: run after every other test in the session")
    normal_form.enable_invariant_checks(True)


def pytest_collection_modifyitems(session, config, items):
    # the invariant sweep reads counters filled by the rest of the session
    items.sort(key=lambda item: item.get_closest_marker("run_last") is not None)


def pytest_sessionfinish(session, exitstatus):
    if normal_form.INVARIANT_STATS["violations"]:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    stats = normal_form.INVARIANT_STATS
    terminalreporter.write_sep("-", "weighted-form invariant sweep")
    terminalreporter.write_line(f"forms checked: {stats['checked']}, violations: {stats['violations']}")
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def acceptance():
    def record(k: int, passed: bool, detail: str) -> None:
        line = f"C{k:<2} {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES[k] = line
        print(line)

    return record
