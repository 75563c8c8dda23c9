import contextlib

import pytest


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(config.acceptance_lines, key=lambda l: l.split("criterion ")[1].split(":")[0].zfill(3)):
            terminalreporter.write_line(line)


class CriterionRecorder:
    """Collects one PASS/FAIL line per acceptance criterion."""

    def __init__(self, lines):
        self._lines = lines

    def record(self, number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f" [{detail}]" if detail else "")
        print(line)
        self._lines.append(line)
        return ok

    @contextlib.contextmanager
    def guard(self, number, title):
        """Record a FAIL line if the body raises before recording anything."""
        before = len(self._lines)
        try:
            yield
        except Exception as exc:
            if len(self._lines) == before:
                self.record(number, title, False, f"{type(exc).__name__}: {exc}")
            raise


@pytest.fixture
def criterion(request):
    return CriterionRecorder(request.config.acceptance_lines)
