import pytest

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; marked FAIL unless the test body completes."""
    name = request.node.name
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    _ACCEPTANCE[name] = (False, "did not complete")
    yield note
    _ACCEPTANCE[name] = (True, state["detail"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed and item.name in _ACCEPTANCE:
        _ACCEPTANCE[item.name] = (False, str(report.longrepr).splitlines()[-1][:160])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
