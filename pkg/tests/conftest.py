from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from sparsecolor import SparsityPatternCSC

DATA = Path(__file__).parent / "data"


def pattern(dense):
    return SparsityPatternCSC.from_dense(np.asarray(dense, dtype=bool))


def path_graph(n):
    a = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = True
    return pattern(a)


def cycle_graph(n):
    a = np.zeros((n, n), dtype=bool)
    for i in range(n):
        a[i, (i + 1) % n] = a[(i + 1) % n, i] = True
    return pattern(a)


def random_rect(rng, max_dim=60, density=None):
    m, n = rng.integers(1, max_dim + 1, size=2)
    d = rng.uniform(0.05, 0.3) if density is None else density
    return pattern(rng.random((m, n)) < d)


def random_symmetric(rng, max_dim=60, diagonal="zero", density=None):
    n = int(rng.integers(1, max_dim + 1))
    d = rng.uniform(0.05, 0.3) if density is None else density
    a = np.triu(rng.random((n, n)) < d, 1)
    a = a | a.T
    if diagonal == "full":
        np.fill_diagonal(a, True)
    elif diagonal == "random":
        np.fill_diagonal(a, rng.random(n) < 0.5)
    return pattern(a)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL/SKIP line per acceptance criterion."""

    @contextmanager
    def record(number, title):
        detail = {}
        status = "FAIL"
        try:
            yield detail
            status = "PASS"
        except pytest.skip.Exception as exc:
            status = "SKIP"
            detail["reason"] = str(exc)
            raise
        except BaseException as exc:
            detail["error"] = f"{type(exc).__name__}: {exc}".splitlines()[0]
            raise
        finally:
            extra = ", ".join(f"{k}={v}" for k, v in detail.items())
            line = f"criterion {number} {status}: {title}" + (f" ({extra})" if extra else "")
            _ACCEPTANCE.append((number, line))
            print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
