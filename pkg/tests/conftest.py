def pytest_runtest_logreport(report):
    if report.when == "call":
        for name, value in report.user_properties:
            if name == "criterion":
                _LINES.append(("PASS" if report.passed else "FAIL", value))


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for verdict, text in sorted(_LINES, key=lambda v: v[1]):
            terminalreporter.write_line(f"{verdict}  {text}")


_LINES: list = []
