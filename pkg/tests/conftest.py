"""Shared fixtures: tier selection and the standard table corpus."""

import os

import pytest

from quasimod import kernels
from quasimod.corpus import chein12, cml81, corpus_tables, group_tables


def resolved_tier():
    """Active test tier: QUASIMOD_TIER, else slow iff the compiled backend runs."""
    env = os.environ.get("QUASIMOD_TIER", "").strip().lower()
    if env in ("fast", "slow"):
        return env
    return "slow" if kernels.BACKEND == "c" else "fast"


TIER = resolved_tier()


def pytest_report_header(config):
    return f"quasimod backend: {kernels.BACKEND}, tier: {TIER}"


@pytest.fixture(scope="session")
def tier():
    return TIER


@pytest.fixture(scope="session")
def slow_tier():
    """Skip the requesting test unless the slow tier is active."""
    if TIER != "slow":
        pytest.skip("slow tier only (set QUASIMOD_TIER=slow)")
    return TIER


@pytest.fixture(scope="session")
def groups():
    """Named group tables: (name, LoopTable) pairs."""
    return group_tables()


@pytest.fixture(scope="session")
def group_map(groups):
    return dict(groups)


@pytest.fixture(scope="session")
def cml():
    return cml81()


@pytest.fixture(scope="session")
def chein():
    return chein12()


@pytest.fixture(scope="session")
def corpus():
    return corpus_tables()
