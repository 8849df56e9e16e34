"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own helpers: sums are
plain Python loops, and the Latin checks restate the definitions.
"""

from __future__ import annotations

import pytest

from multimagic.catalog import embedded_catalog


# --- oracles -------------------------------------------------------------------


def direct_power_sum(count: int, e: int) -> int:
    return sum(k**e for k in range(count))


def direct_constant(n: int, e: int) -> int:
    total = direct_power_sum(n * n, e)
    assert total % n == 0
    return total // n


def line_sums(grid, e: int) -> list[int]:
    n = len(grid)
    rows = [sum(v**e for v in r) for r in grid]
    cols = [sum(grid[i][j] ** e for i in range(n)) for j in range(n)]
    diag = sum(grid[i][i] ** e for i in range(n))
    back = sum(grid[i][n - 1 - i] ** e for i in range(n))
    return rows + cols + [diag, back]


def oracle_multimagic(grid, t: int) -> bool:
    n = len(grid)
    if sorted(v for r in grid for v in r) != list(range(n * n)):
        return False
    return all(set(line_sums(grid, e)) == {direct_constant(n, e)} for e in range(1, t + 1))


def oracle_latin(grid) -> bool:
    n = len(grid)
    want = set(range(n))
    return all(set(r) == want and len(r) == n for r in grid) and all(
        {grid[i][j] for i in range(n)} == want for j in range(n)
    )


def oracle_diagonal(grid) -> bool:
    n = len(grid)
    return (
        oracle_latin(grid)
        and {grid[i][i] for i in range(n)} == set(range(n))
        and {grid[i][n - 1 - i] for i in range(n)} == set(range(n))
    )


def oracle_orthogonal(a, b) -> bool:
    n = len(a)
    return len({(a[i][j], b[i][j]) for i in range(n) for j in range(n)}) == n * n


def as_lists(obj):
    cells = getattr(obj, "cells", obj)
    return [list(r) for r in cells]


# --- fixtures ------------------------------------------------------------------


@pytest.fixture(scope="session")
def catalog():
    return embedded_catalog()


@pytest.fixture(scope="session")
def pf8(catalog):
    return catalog.get("pfeffermann-8").square


@pytest.fixture(scope="session")
def b0(catalog):
    return catalog.get("ex1-b0").square


@pytest.fixture(scope="session")
def b1(catalog):
    return catalog.get("ex1-b1").square


@pytest.fixture(scope="session")
def d8(catalog):
    return catalog.get("ex2-d").square


@pytest.fixture(scope="session")
def big_b(catalog):
    return catalog.get("ex2-pgms-32").square


@pytest.fixture(scope="session")
def big_c(catalog):
    return catalog.get("ex2-c-32").square


@pytest.fixture(scope="session")
def ex4(catalog):
    return {k: catalog.get(f"ex4-{k}") for k in ("a", "b", "k", "c0", "c1", "c2")}


@pytest.fixture(autouse=True)
def _isolated_catalog_dir(tmp_path, monkeypatch):
    """Keep ingestion away from the real home directory."""
    monkeypatch.setenv("MULTIMAGIC_CATALOG", str(tmp_path / "catalog"))


# --- acceptance summary ----------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "PASS" if report.passed else "FAIL"
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name}")
