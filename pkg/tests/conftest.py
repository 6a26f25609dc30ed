import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "budget(seconds): wall-time budget for an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if not item.name.startswith("test_criterion_"):
        return
    label = (item.function.__doc__ or item.name).strip()
    prev = _criteria.get(label, (True, 0.0))
    ok = prev[0] and not rep.failed
    elapsed = dict(item.user_properties).get("elapsed", prev[1])
    _criteria[label] = (ok, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0])):
        ok, elapsed = _criteria[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s)")
