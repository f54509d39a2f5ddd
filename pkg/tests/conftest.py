import pytest

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    # a failure in any phase counts; the call phase carries the timing
    if rep.when == "call" or rep.failed:
        verdict = "PASS" if rep.passed else "FAIL"
        seconds = dict(item.user_properties).get("seconds", rep.duration)
        _ACCEPTANCE.append((mark.args[0], verdict, seconds))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict, seconds in _ACCEPTANCE:
        terminalreporter.write_line(f"{verdict}  {label}  ({seconds:.2f} s)")
