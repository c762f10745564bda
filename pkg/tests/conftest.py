import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dejean_check import F, U1, WordIndex, build_test_word, fixed_point_prefix  # noqa: E402


@pytest.fixture(scope="session")
def w_prefix_10k():
    return fixed_point_prefix(F, 1, 10_000)


@pytest.fixture(scope="session")
def w_prefix_100k():
    return fixed_point_prefix(F, 1, 100_000)


@pytest.fixture(scope="session")
def index_10k(w_prefix_10k):
    return WordIndex(w_prefix_10k)


@pytest.fixture(scope="session")
def test_word_u1():
    return build_test_word(F, U1, 7)
