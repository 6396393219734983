import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from srkit.field import GF  # noqa: E402
from srkit.search import _candidates, level_minors  # noqa: E402
from srkit.toeplitz import LtToeplitz  # noqa: E402

DATA = Path(__file__).parent / "data"


def random_superregular(rng, F, gamma):
    """Uniform-ish random superregular matrix: DFS with shuffled candidate order."""
    minors = level_minors(gamma)
    a = []

    def rec(l):
        cands = list(_candidates(F, a, l, minors))
        rng.shuffle(cands)
        for v in cands:
            a.append(v)
            if l == gamma or rec(l + 1):
                return True
            a.pop()
        return False

    return LtToeplitz(F, a) if rec(0) else None


def random_superregular_batch(count, seed=0, qs=(3, 4, 5, 7, 8, 9, 11, 13, 16), max_gamma=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        F = GF(rng.choice(qs))
        A = random_superregular(rng, F, rng.randint(0, max_gamma))
        if A is not None:
            out.append(A)
    return out


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run the long minimum-field rows")


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: long rows, run with --extended")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(str(k).split()[0]), str(k))):
        ok, timing, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} {timing} {detail}".rstrip())


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def gf64_matrix():
    return LtToeplitz(GF(64), ["1", "w", "w^9", "w^33", "w^33", "w^9", "w", "1"])
