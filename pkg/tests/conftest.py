import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", deadline=None, max_examples=200, derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_criteria: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    marker = report.keywords.get("criterion_number")
    if marker is None or (report.when == "setup" and report.passed):
        return
    if report.when == "call" or report.failed:
        n = int(report.nodeid.rsplit("criterion_", 1)[1].split("_")[0])
        _criteria[n] = _criteria.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n}: {'pass' if _criteria[n] else 'fail'}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion_number: acceptance criterion test")
