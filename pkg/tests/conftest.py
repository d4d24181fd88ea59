import time
from contextlib import contextmanager

import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion():
    @contextmanager
    def run(number, title, budget_s):
        t0 = time.perf_counter()
        status, note = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            if elapsed >= budget_s:
                note = f"over budget {budget_s}s"
                raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget_s}s")
            status = "PASS"
        except Exception as exc:
            note = note or type(exc).__name__
            raise
        finally:
            elapsed = time.perf_counter() - t0
            ACCEPTANCE[number] = f"[{status}] {number:>2}. {title} ({elapsed:.2f}s / {budget_s}s){' ' + note if note else ''}"

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
