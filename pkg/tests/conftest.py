"""Shared fixtures: one spiral table and one discovery run per session."""

from __future__ import annotations

import pytest

from rootspiral.claims import claimed_divisors
from rootspiral.discovery import discover
from rootspiral.spiral import shared_table

#: Large enough for every drift window over the published polynomials.
TABLE_N_MAX = 25000


@pytest.fixture(scope="session")
def table():
    return shared_table(TABLE_N_MAX)


@pytest.fixture(scope="session")
def reports(table):
    """DivisorReports for every divisor with published data (default config)."""
    return {d: discover(d, table=table) for d in claimed_divisors()}


def pytest_runtest_logreport(report):
    """Print one line per acceptance criterion so results read at a glance."""
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {outcome}", flush=True)
