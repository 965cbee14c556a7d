import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--quick",
        action="store_true",
        default=False,
        help="skip the exhaustive oracle sweep (about three minutes); the smoke subset still runs",
    )


def pytest_collection_modifyitems(config, items):
    if not (config.getoption("--quick") or os.environ.get("KOSZUL_QUICK") == "1"):
        return
    skip = pytest.mark.skip(reason="exhaustive sweep skipped by --quick")
    for item in items:
        if "full_sweep" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
