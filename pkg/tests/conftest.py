import contextlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    """Context manager that records one PASS/FAIL line per acceptance criterion."""
    lines = request.config._acceptance_lines

    @contextlib.contextmanager
    def record(number, title):
        try:
            yield
        except BaseException as exc:
            lines.append(f"FAIL  criterion {number}: {title} ({type(exc).__name__}: {exc})")
            print(lines[-1])
            raise
        lines.append(f"PASS  criterion {number}: {title}")
        print(lines[-1])

    return record
