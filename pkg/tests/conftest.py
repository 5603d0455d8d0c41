"""Collect acceptance outcomes and print one line per criterion at the end."""

_outcomes: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1].split("[")[0]
        _outcomes.setdefault(name, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_outcomes):
        runs = _outcomes[name]
        status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"{status}  {name.removeprefix('test_')} ({sum(runs)}/{len(runs)} cases)")
