from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: list[str] = []


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@contextmanager
def _criterion(number: int, title: str, limit_s: float):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit_s:
            raise AssertionError(f"criterion {number} took {elapsed:.2f} s, limit {limit_s} s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"{status} criterion {number:2d}: {title} ({elapsed:.2f} s, limit {limit_s:g} s)"
        _CRITERIA.append(line)
        print(line)


@pytest.fixture
def criterion():
    """Context manager timing one acceptance criterion and recording its outcome."""
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
