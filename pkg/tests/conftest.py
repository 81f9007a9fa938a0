import os

import pytest
from hypothesis import HealthCheck, settings

from krcrystal.tableaux import Tableau, TensorElement

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def T(*rows, order="standard"):
    return Tableau.from_rows(rows, order)


def pair(a, b):
    return TensorElement.of(a, b)


@pytest.fixture(autouse=True)
def _cache_in_tmp(tmp_path, monkeypatch):
    monkeypatch.setenv("KRC_CACHE_DIR", str(tmp_path / "cache"))


# one summary line per acceptance criterion, filled by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
