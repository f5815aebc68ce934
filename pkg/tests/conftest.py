import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): one of the twelve acceptance criteria")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    rows = []
    for key in ("passed", "failed"):
        for report in terminalreporter.getreports(key):
            if report.when != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                number, title = props["criterion"]
                rows.append((number, title, "PASS" if report.passed else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, title, status in sorted(rows):
            terminalreporter.write_line(f"criterion {number:2d}  {status}  {title}")
