import pytest

CRITERIA = {
    1: "three restriction algorithms agree",
    2: "golden restriction values",
    3: "subword-complex topology",
    4: "vertex decomposition trichotomy",
    5: "interior K-polynomial identity",
    6: "degeneration chain",
    7: "cohomology limit",
    8: "boundary ideal class",
    9: "Bruhat and descent-policy oracles",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(marker.args[0], []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        if n not in _results:
            continue
        ok = all(_results[n])
        k = len(_results[n])
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({title}, {k} test{'s' if k != 1 else ''})")
