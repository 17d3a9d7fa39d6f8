import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    key = (mark.args[0], mark.args[1])
    ok = _RESULTS.get(key, True)
    if rep.failed:
        ok = False
    elif rep.when == "call":
        ok = ok and rep.passed
    _RESULTS[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(_RESULTS.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {title}")
