"""Shared fixtures: the small-graph ensemble, cached large spectra and the
acceptance report printed at the end of the run."""

from __future__ import annotations

import functools

import pytest

from hamspec import generators
from hamspec.graph import is_connected
from hamspec.mixing import true_gap
from hamspec.spectral import check_fan_yu

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    ACCEPTANCE[number] = (bool(passed), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")


def ensemble(max_n: int, random_count: int = 50) -> list[tuple[str, object]]:
    """Named families on up to ``max_n`` vertices, every remark-family member,
    and ``random_count`` seeded G(max_n, 1/2) graphs."""
    out = []
    for n in range(1, max_n + 1):
        if n >= 3:
            out.append((f"complete{n}", generators.complete(n)))
            out.append((f"cycle{n}", generators.cycle(n)))
            for beta in range(1, n):
                out.append((f"remark{n}_{beta}", generators.remark_family(n, beta)))
        out.append((f"path{n}", generators.path(n)))
        if n >= 2:
            out.append((f"star{n}", generators.star(n)))
    for seed in range(random_count):
        out.append((f"gnp{max_n}_s{seed}", generators.erdos_renyi(max_n, 0.5, seed)))
    return out


def connected_ensemble(max_n: int, random_count: int = 50):
    return [(name, g) for name, g in ensemble(max_n, random_count) if g.n >= 2 and is_connected(g)]


@functools.lru_cache(maxsize=None)
def remark_gap(n: int, alpha: float) -> float:
    """Eigensolver gap of the remark family; cached because n = 2000 solves take minutes."""
    return true_gap(generators.remark_family(n, generators.remark_beta(n, alpha)))


@functools.lru_cache(maxsize=None)
def complete_fan_yu_verdict(n: int = 1000, c: float = 1.4):
    return check_fan_yu(generators.complete(n), c)


@pytest.fixture(scope="session")
def petersen():
    return generators.petersen()
