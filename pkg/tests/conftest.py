import itertools
import os

import pytest
from hypothesis import HealthCheck, settings

from abwt.galois import is_primitive

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=2000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def all_words(alphabet: bytes, max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield bytes(t)


def primitive_words(alphabet: bytes, max_len: int, min_len: int = 1):
    return (w for w in all_words(alphabet, max_len, min_len) if is_primitive(w))


def rotations(w: bytes):
    return [w[i:] + w[:i] for i in range(len(w))]


def naive_circular_count(w: bytes, p: bytes) -> int:
    return sum(r.startswith(p) for r in rotations(w))


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240601)


def words(alphabet: bytes = b"abc", min_size: int = 1, max_size: int = 30):
    from hypothesis import strategies as st

    return st.lists(st.sampled_from(list(alphabet)), min_size=min_size, max_size=max_size).map(bytes)


def primitive(alphabet: bytes = b"abc", min_size: int = 1, max_size: int = 30):
    return words(alphabet, min_size, max_size).filter(is_primitive)


ACCEPTANCE_LINES: list[str] = []


class Recorder:
    def __call__(self, number: int, ok: bool, detail: str) -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok


@pytest.fixture
def report():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
