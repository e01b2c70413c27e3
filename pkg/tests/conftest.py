"""Shared fixtures for the test suite.

The frozen catalog is loaded once per session: the per-config caches
(negative-definite subsets, oracle tables) key on object identity, so
sharing the loaded records keeps the oracle-heavy tests fast.
"""
from __future__ import annotations

import pytest

from dpdelta import CaseRecord, SurfaceConfig, case_names, load_case


@pytest.fixture(scope="session")
def records() -> dict[str, CaseRecord]:
    """Every catalog case, loaded once."""
    return {name: load_case(name) for name in case_names()}


@pytest.fixture(scope="session")
def a1_nodal(records: dict[str, CaseRecord]) -> SurfaceConfig:
    """The two-curve configuration with a (-1)-curve meeting E twice."""
    return records["A1-nodal"].config("base")


@pytest.fixture(scope="session")
def a1_cuspidal(records: dict[str, CaseRecord]) -> SurfaceConfig:
    """The orbifold configuration (non-smooth surface, fractional Gram)."""
    return records["A1-cuspidal"].config("base")


@pytest.fixture(scope="session")
def a2_nodal(records: dict[str, CaseRecord]) -> CaseRecord:
    """A case with a base configuration, a blowup and a class bound."""
    return records["A2-nodal"]
