"""Collects acceptance results and prints one line per criterion at the end of the run."""
import re

import pytest

_ACCEPTANCE = {}
_NAME = re.compile(r"test_criterion_(\d+)([a-z]?)_")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = _NAME.match(item.name)
    if not m or item.module.__name__.split(".")[-1] != "test_acceptance":
        return
    if rep.when != "call" and rep.passed:
        return
    key = (int(m.group(1)), m.group(2))
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    detail = dict(item.user_properties).get("detail", "")
    status = "PASS" if rep.passed else "FAIL"
    _ACCEPTANCE[key] = (status, title, detail, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, sub), (status, title, detail, seconds) in sorted(_ACCEPTANCE.items()):
        line = f"[{status}] {num}{sub}: {title} ({seconds:.2f}s)"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
