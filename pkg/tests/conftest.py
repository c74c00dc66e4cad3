"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

_RESULTS: dict[int, list] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = props["criterion"]
        ok = report.outcome == "passed"
        prev = _RESULTS.get(num)
        ok = ok and (prev is None or prev[0])
        _RESULTS[num] = [ok, props.get("label", ""), report.duration + (prev[2] if prev else 0.0)]


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        ok, label, secs = _RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{num:2d}] {label} ({secs:.2f} s)")
