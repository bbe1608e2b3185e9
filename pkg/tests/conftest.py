import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title, limit = mark.args
    note = getattr(item, "criterion_note", "")
    _CRITERIA.append((number, title, limit, rep.passed, getattr(item, "criterion_elapsed", None), note))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, limit, ok, elapsed, note in sorted(_CRITERIA):
        t = f"{elapsed:.2f}s" if elapsed is not None else "n/a"
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  [{t} / limit {limit}s]"
        terminalreporter.write_line(line + (f"  ({note})" if note else ""))
