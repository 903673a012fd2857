_CRITERIA: dict[str, str] = {}
_OUTCOMES: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.name.startswith("test_criterion"):
            doc = (item.function.__doc__ or "").strip().splitlines()
            _CRITERIA[item.nodeid] = doc[0] if doc else item.name


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid in _CRITERIA:
        _OUTCOMES[report.nodeid] = report.outcome
    elif (
        report.when == "setup"
        and report.nodeid in _CRITERIA
        and report.outcome != "passed"
    ):
        _OUTCOMES[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_OUTCOMES):
        label = _CRITERIA[nodeid]
        outcome = "PASS" if _OUTCOMES[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{outcome}  {label}")
