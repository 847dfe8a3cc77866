import random
import pytest

from ultrametric.generate import random_dendrogram_space, sequence_space_sample
from helpers import euclidean

_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    failed = call.excinfo is not None
    _results[number] = ("FAIL" if failed else "PASS", text)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        verdict, text = _results[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {text}")


@pytest.fixture
def line3():
    return euclidean([0, 1, 2])


@pytest.fixture(scope="session")
def small_ultrametric_spaces():
    rng = random.Random(7)
    spaces = [random_dendrogram_space(rng.randint(1, 9), rng) for _ in range(15)]
    spaces += [sequence_space_sample(rng.randint(2, 9), rng, prefix_len=4) for _ in range(15)]
    return spaces
